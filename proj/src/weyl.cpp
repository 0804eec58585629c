#include "indrep/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace indrep {

WeylElement::WeylElement(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size())
    throw DimensionMismatch("permutation and sign tuple sizes differ");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    const int p = perm_[j];
    if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p])
      throw ValidationError("not a permutation");
    seen[p] = true;
    if (signs_[j] != 1 && signs_[j] != -1)
      throw ValidationError("signs must be +1 or -1");
  }
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> perm(n), signs(n, 1);
  std::iota(perm.begin(), perm.end(), 0);
  return WeylElement(std::move(perm), std::move(signs));
}

WeylElement WeylElement::checked(Family family, std::vector<int> perm,
                                 std::vector<int> signs) {
  WeylElement w(std::move(perm), std::move(signs));
  if (!family_admits(family, w))
    throw ValidationError("signed permutation is not in the type " +
                          std::string(1, family_letter(family)) + " Weyl group");
  return w;
}

bool WeylElement::is_identity() const {
  for (int j = 0; j < dim(); ++j) {
    if (perm_[j] != j || signs_[j] != 1) return false;
  }
  return true;
}

bool WeylElement::is_sign_change_only() const {
  for (int j = 0; j < dim(); ++j) {
    if (perm_[j] != j) return false;
  }
  return true;
}

int WeylElement::flip_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  if (dim() != other.dim())
    throw DimensionMismatch("composing elements of different dimensions");
  const int n = dim();
  std::vector<int> perm(n), signs(n);
  for (int j = 0; j < n; ++j) {
    perm[j] = perm_[other.perm_[j]];
    signs[j] = other.signs_[j] * signs_[other.perm_[j]];
  }
  return WeylElement(std::move(perm), std::move(signs));
}

WeylElement WeylElement::inverse() const {
  const int n = dim();
  std::vector<int> perm(n), signs(n);
  for (int j = 0; j < n; ++j) {
    perm[perm_[j]] = j;
    signs[perm_[j]] = signs_[j];
  }
  return WeylElement(std::move(perm), std::move(signs));
}

Root WeylElement::apply(const Root& beta) const {
  if (beta.size() != dim())
    throw DimensionMismatch("root dimension does not match the element");
  Root out = Root::Zero(dim());
  for (int j = 0; j < dim(); ++j) out[perm_[j]] = signs_[j] * beta[j];
  return out;
}

Eigen::MatrixXi WeylElement::matrix() const {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(dim(), dim());
  for (int j = 0; j < dim(); ++j) m(perm_[j], j) = signs_[j];
  return m;
}

std::vector<int> WeylElement::one_line() const {
  std::vector<int> word(dim());
  for (int j = 0; j < dim(); ++j) word[j] = signs_[j] * (perm_[j] + 1);
  return word;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  os << '[';
  const auto word = one_line();
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (j) os << ", ";
    os << word[j];
  }
  os << ']';
  return os.str();
}

WeylElement WeylElement::from_one_line(const std::vector<int>& word) {
  std::vector<int> perm(word.size()), signs(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (word[j] == 0) throw ValidationError("one-line entries are nonzero");
    perm[j] = std::abs(word[j]) - 1;
    signs[j] = word[j] > 0 ? 1 : -1;
  }
  return WeylElement(std::move(perm), std::move(signs));
}

std::uint64_t WeylElement::code() const {
  std::uint64_t c = 0;
  for (int j = 0; j < dim(); ++j) {
    c = (c << 5) | (static_cast<std::uint64_t>(perm_[j]) << 1) |
        (signs_[j] < 0 ? 1u : 0u);
  }
  return c;
}

bool one_line_less(const WeylElement& a, const WeylElement& b) {
  return a.one_line() < b.one_line();
}

bool family_admits(Family family, const WeylElement& w) {
  if (family == Family::A) return w.flip_count() == 0;
  if (family == Family::D) return w.flip_count() % 2 == 0;
  return true;
}

WeylElement reflection(const RootSystem& rs, const Root& beta) {
  if (!rs.contains_positive(beta))
    throw ForeignRoot("reflection root " + root_to_string(beta) +
                      " is not a positive root");
  const int n = rs.dim();
  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    if (beta[i] != 0) support.push_back(i);
  }
  std::vector<int> perm(n), signs(n, 1);
  std::iota(perm.begin(), perm.end(), 0);
  if (support.size() == 1) {
    signs[support[0]] = -1;  // 2e_i or e_i
  } else {
    const int i = support[0], j = support[1];
    std::swap(perm[i], perm[j]);
    if (beta[i] == beta[j]) {  // e_i + e_j
      signs[i] = -1;
      signs[j] = -1;
    }
  }
  return WeylElement(std::move(perm), std::move(signs));
}

int length(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const Root& beta : rs.positive_roots) {
    if (!is_positive(w.apply(beta))) ++count;
  }
  return count;
}

WeylElement longest_element(const RootSystem& rs) {
  const int n = rs.dim();
  std::vector<int> perm(n), signs(n, 1);
  std::iota(perm.begin(), perm.end(), 0);
  switch (rs.spec.family) {
    case Family::A:
      std::reverse(perm.begin(), perm.end());
      break;
    case Family::B:
    case Family::C:
      std::fill(signs.begin(), signs.end(), -1);
      break;
    case Family::D:
      std::fill(signs.begin(), signs.end(), -1);
      if (n % 2 != 0) signs[n - 1] = 1;
      break;
  }
  return WeylElement(std::move(perm), std::move(signs));
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, int max_rank) {
  if (rs.spec.rank > max_rank)
    throw EnumerationBoundExceeded("rank " + std::to_string(rs.spec.rank) +
                                   " exceeds the enumeration bound " +
                                   std::to_string(max_rank));
  if (rs.dim() > kPackingDimLimit)
    throw EnumerationBoundExceeded("dimension " + std::to_string(rs.dim()) +
                                   " exceeds the packing limit");

  std::vector<WeylElement> generators;
  generators.reserve(rs.simple_roots.size());
  for (const Root& alpha : rs.simple_roots)
    generators.push_back(reflection(rs, alpha));

  std::vector<WeylElement> elements{WeylElement::identity(rs.dim())};
  std::unordered_set<std::uint64_t> visited{elements.front().code()};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    const WeylElement current = elements[next];  // copy: vector may reallocate
    for (const WeylElement& g : generators) {
      WeylElement candidate = g.compose(current);
      if (visited.insert(candidate.code()).second)
        elements.push_back(std::move(candidate));
    }
  }

  std::vector<std::pair<int, std::size_t>> order(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k)
    order[k] = {length(rs, elements[k]), k};
  std::sort(order.begin(), order.end(),
            [&elements](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return one_line_less(elements[a.second], elements[b.second]);
            });
  std::vector<WeylElement> sorted;
  sorted.reserve(elements.size());
  for (const auto& [len, k] : order) sorted.push_back(std::move(elements[k]));
  return sorted;
}

}  // namespace indrep
