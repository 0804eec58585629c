#pragma once

#include <span>

#include "indrep/cyclotomic.hpp"

namespace indrep {

/// Value of an unramified character at a uniformizer, restricted to roots of
/// unity e^{2 pi i a/m}, or the marker for a ramified character.
struct SatakeValue {
  bool ramified = false;
  long long a = 0;  // reduced fraction a/m, 0 <= a < m, gcd(a, m) = 1
  long long m = 1;

  static SatakeValue ramified_value();
  static SatakeValue unramified(long long a, long long m);  // normalizes

  friend bool operator==(const SatakeValue&, const SatakeValue&) = default;
};

/// Local L-factor 1/D(t) in t = q^{-s}, held by its denominator polynomial.
/// The constant term is always exactly 1.
class LFactor {
 public:
  LFactor() : denominator_{Cyclotomic::integer(1)} {}
  explicit LFactor(std::vector<Cyclotomic> denominator);

  const std::vector<Cyclotomic>& denominator() const { return denominator_; }
  int degree() const { return static_cast<int>(denominator_.size()) - 1; }

  friend LFactor operator*(const LFactor& a, const LFactor& b);
  friend bool operator==(const LFactor& a, const LFactor& b);

 private:
  std::vector<Cyclotomic> denominator_;  // ascending powers of t
};

/// Rank-one abelian factor: 1 for ramified input, 1/(1 - zeta t) otherwise.
LFactor tate_l(const SatakeValue& v);

/// det(I - A t)^{-1} for the diagonal of unramified values: the denominator
/// is the product of (1 - zeta_i t). Throws RamifiedComponent on mixed input.
LFactor gl_unramified_l(std::span<const SatakeValue> values);

/// Multiplicity of t = 1 as a root of the denominator (s = 0 corresponds to
/// t = q^0 = 1).
int pole_order_at_zero(const LFactor& l);

}  // namespace indrep
