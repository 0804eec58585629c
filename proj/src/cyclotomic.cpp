#include "indrep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace indrep {

namespace {

// Exact division of integer polynomials, quotient only; the divisor is monic.
std::vector<long long> divide_by_monic(const std::vector<long long>& num,
                                       const std::vector<long long>& den) {
  std::vector<long long> rem = num;
  std::vector<long long> quot(num.size() - den.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const long long c = rem[k + den.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
  }
  return quot;
}

std::size_t degree_of(const std::vector<long long>& p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

// Remainder of p modulo the monic polynomial m, in place.
void reduce_by_monic(std::vector<long long>& p, const std::vector<long long>& m) {
  const std::size_t deg_m = m.size() - 1;
  for (std::size_t k = p.size(); k-- > deg_m;) {
    const long long c = p[k];
    if (c == 0) continue;
    p[k] = 0;
    for (std::size_t j = 0; j < deg_m; ++j) p[k - deg_m + j] -= c * m[j];
  }
  p.resize(deg_m == 0 ? 1 : deg_m);
}

const std::vector<long long>& cached_cyclotomic(long long n) {
  static std::recursive_mutex mutex;
  static std::map<long long, std::vector<long long>> cache;
  const std::lock_guard<std::recursive_mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<long long> poly(n + 1, 0);  // x^n - 1
  poly[0] = -1;
  poly[n] = 1;
  for (long long d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_by_monic(poly, cached_cyclotomic(d));
  }
  poly.resize(degree_of(poly) + 1);
  return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(long long n) {
  if (n < 1) throw ValidationError("cyclotomic polynomial index must be >= 1");
  return cached_cyclotomic(n);
}

Cyclotomic Cyclotomic::integer(long long k) {
  return Cyclotomic(1, {k});
}

Cyclotomic Cyclotomic::root_of_unity(long long a, long long m) {
  if (m < 1) throw ValidationError("root of unity order must be >= 1");
  a = ((a % m) + m) % m;
  const long long g = std::gcd(a == 0 ? m : a, m);
  a /= g;
  m /= g;
  std::vector<long long> p(a + 1, 0);
  p[a] = 1;
  reduce_by_monic(p, cached_cyclotomic(m));
  return Cyclotomic(m, std::move(p));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](long long c) { return c == 0; });
}

Cyclotomic Cyclotomic::lifted(long long m) const {
  if (m == order_) return *this;
  if (m % order_ != 0)
    throw ValidationError("can only lift to a multiple of the current order");
  const long long stride = m / order_;
  std::vector<long long> p(coeffs_.size() * stride, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * stride] = coeffs_[k];
  reduce_by_monic(p, cached_cyclotomic(m));
  return Cyclotomic(m, std::move(p));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const long long m = std::lcm(a.order_, b.order_);
  Cyclotomic x = a.lifted(m), y = b.lifted(m);
  for (std::size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic x = *this;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const long long m = std::lcm(a.order_, b.order_);
  const Cyclotomic x = a.lifted(m), y = b.lifted(m);
  std::vector<long long> p(x.coeffs_.size() + y.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
      p[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  reduce_by_monic(p, cached_cyclotomic(m));
  return Cyclotomic(m, std::move(p));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const long long m = std::lcm(a.order_, b.order_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(order_);
    z += static_cast<double>(coeffs_[k]) * std::polar(1.0, angle);
  }
  return z;
}

std::vector<std::pair<long long, long long>> Cyclotomic::unit_terms() const {
  std::vector<std::pair<long long, long long>> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    long long count = coeffs_[k];
    if (count == 0) continue;
    long long a = static_cast<long long>(k), m = order_;
    if (count < 0) {  // -zeta^k = e^{2 pi i (k/m + 1/2)}
      const long long m2 = std::lcm(m, 2LL);
      a = (a * (m2 / m) + m2 / 2) % m2;
      m = m2;
      count = -count;
    }
    const long long g = std::gcd(a == 0 ? m : a, m);
    for (long long c = 0; c < count; ++c) terms.emplace_back(a / g, m / g);
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

}  // namespace indrep
