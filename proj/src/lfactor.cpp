#include "indrep/lfactor.hpp"

#include <numeric>
#include <string>

namespace indrep {

SatakeValue SatakeValue::ramified_value() {
  return SatakeValue{true, 0, 1};
}

SatakeValue SatakeValue::unramified(long long a, long long m) {
  if (m < 1) throw ValidationError("root of unity order must be >= 1");
  a = ((a % m) + m) % m;
  const long long g = std::gcd(a == 0 ? m : a, m);
  return SatakeValue{false, a / g, m / g};
}

LFactor::LFactor(std::vector<Cyclotomic> denominator)
    : denominator_(std::move(denominator)) {
  if (denominator_.empty() || !(denominator_.front() == Cyclotomic::integer(1)))
    throw ValidationError("L-factor denominators have constant term 1");
}

LFactor operator*(const LFactor& a, const LFactor& b) {
  std::vector<Cyclotomic> prod(a.denominator_.size() + b.denominator_.size() - 1);
  for (std::size_t i = 0; i < a.denominator_.size(); ++i) {
    for (std::size_t j = 0; j < b.denominator_.size(); ++j)
      prod[i + j] = prod[i + j] + a.denominator_[i] * b.denominator_[j];
  }
  return LFactor(std::move(prod));
}

bool operator==(const LFactor& a, const LFactor& b) {
  if (a.denominator_.size() != b.denominator_.size()) return false;
  for (std::size_t k = 0; k < a.denominator_.size(); ++k) {
    if (!(a.denominator_[k] == b.denominator_[k])) return false;
  }
  return true;
}

LFactor tate_l(const SatakeValue& v) {
  if (v.ramified) return LFactor();
  return LFactor({Cyclotomic::integer(1), -Cyclotomic::root_of_unity(v.a, v.m)});
}

LFactor gl_unramified_l(std::span<const SatakeValue> values) {
  LFactor product;
  for (const SatakeValue& v : values) {
    if (v.ramified)
      throw RamifiedComponent(
          "the determinant formula needs every component unramified");
    product = product * tate_l(v);
  }
  return product;
}

int pole_order_at_zero(const LFactor& l) {
  std::vector<Cyclotomic> poly = l.denominator();
  int order = 0;
  while (poly.size() > 1) {
    Cyclotomic at_one;
    for (const Cyclotomic& c : poly) at_one = at_one + c;
    if (!at_one.is_zero()) break;
    // poly = (1 - t) * q  =>  q is the sequence of prefix sums, last dropped.
    std::vector<Cyclotomic> quotient(poly.size() - 1);
    Cyclotomic acc;
    for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
      acc = acc + poly[k];
      quotient[k] = acc;
    }
    poly = std::move(quotient);
    ++order;
  }
  return order;
}

}  // namespace indrep
