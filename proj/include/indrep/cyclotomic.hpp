#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "indrep/errors.hpp"

namespace indrep {

/// Coefficients of the n-th cyclotomic polynomial, ascending, monic.
std::vector<long long> cyclotomic_polynomial(long long n);

/// Element of Z[zeta_N]: an integer combination of 1, zeta, ..., zeta^{phi(N)-1}
/// where zeta = e^{2 pi i / N}. Arithmetic reduces modulo the cyclotomic
/// polynomial, so representations are canonical for a fixed N; mixed orders
/// are lifted to the least common multiple.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_{0} {}

  static Cyclotomic integer(long long k);
  /// e^{2 pi i a / m}; the fraction is reduced internally.
  static Cyclotomic root_of_unity(long long a, long long m);

  long long order() const { return order_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Cyclotomic lifted(long long m) const;  // order() must divide m

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::complex<double> to_complex() const;

  /// The value as a formal sum of roots of unity with positive integer
  /// multiplicities: pairs (a, m) for e^{2 pi i a/m}, sorted, repeated by
  /// multiplicity. Negative basis coefficients pick up a half turn.
  std::vector<std::pair<long long, long long>> unit_terms() const;

 private:
  Cyclotomic(long long order, std::vector<long long> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}

  long long order_;
  std::vector<long long> coeffs_;
};

}  // namespace indrep
