#include "indrep/rootdata.hpp"

#include <algorithm>
#include <sstream>

namespace indrep {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
  }
  throw ValidationError(std::string("unsupported family letter '") + c + "'");
}

void CartanSpec::validate() const {
  if (rank < 1)
    throw UnsupportedRank("rank must be >= 1, got " + std::to_string(rank));
  if (family == Family::D && rank < 2)
    throw UnsupportedRank("family D requires rank >= 2, got " + std::to_string(rank));
}

int CartanSpec::ambient_dim() const {
  return family == Family::A ? rank + 1 : rank;
}

bool same_root(const Root& a, const Root& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

bool lex_less(const Root& a, const Root& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                      b.data(), b.data() + b.size());
}

std::string root_to_string(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (i) os << ',';
    os << r[i];
  }
  os << ')';
  return os.str();
}

bool is_positive(const Root& r) {
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (r[i] != 0) return r[i] > 0;
  }
  return false;
}

Root sign_normalized(const Root& r) {
  return is_positive(r) ? r : Root(-r);
}

namespace {

Root unit(int n, int i, int v) {
  Root r = Root::Zero(n);
  r[i] = v;
  return r;
}

Root pair_root(int n, int i, int j, int vi, int vj) {
  Root r = Root::Zero(n);
  r[i] = vi;
  r[j] = vj;
  return r;
}

}  // namespace

bool is_root_of(const CartanSpec& spec, const Root& r) {
  const int n = spec.ambient_dim();
  if (r.size() != n) return false;
  std::vector<std::pair<int, int>> support;  // (index, value)
  for (int i = 0; i < n; ++i) {
    if (r[i] != 0) support.emplace_back(i, r[i]);
  }
  if (support.size() == 1) {
    auto [i, v] = support[0];
    (void)i;
    if (spec.family == Family::B) return v == 1 || v == -1;
    if (spec.family == Family::C) return v == 2 || v == -2;
    return false;
  }
  if (support.size() == 2) {
    auto [i, vi] = support[0];
    auto [j, vj] = support[1];
    (void)i;
    (void)j;
    const bool pm = (vi == 1 || vi == -1) && (vj == 1 || vj == -1);
    if (!pm) return false;
    if (spec.family == Family::A) return vi + vj == 0;  // e_i - e_j only
    return true;  // B/C/D admit e_i +- e_j
  }
  return false;
}

RootSystem build_root_system(const CartanSpec& spec) {
  spec.validate();
  const int n = spec.ambient_dim();
  RootSystem rs;
  rs.spec = spec;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      rs.positive_roots.push_back(pair_root(n, i, j, 1, -1));
      if (spec.family != Family::A)
        rs.positive_roots.push_back(pair_root(n, i, j, 1, 1));
    }
  }
  if (spec.family == Family::B) {
    for (int i = 0; i < n; ++i) rs.positive_roots.push_back(unit(n, i, 1));
  }
  if (spec.family == Family::C) {
    for (int i = 0; i < n; ++i) rs.positive_roots.push_back(unit(n, i, 2));
  }

  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i)
        rs.simple_roots.push_back(pair_root(n, i, i + 1, 1, -1));
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i)
        rs.simple_roots.push_back(pair_root(n, i, i + 1, 1, -1));
      rs.simple_roots.push_back(unit(n, n - 1, 1));
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i)
        rs.simple_roots.push_back(pair_root(n, i, i + 1, 1, -1));
      rs.simple_roots.push_back(unit(n, n - 1, 2));
      break;
    case Family::D:
      for (int i = 0; i + 1 < n; ++i)
        rs.simple_roots.push_back(pair_root(n, i, i + 1, 1, -1));
      rs.simple_roots.push_back(pair_root(n, n - 2, n - 1, 1, 1));
      break;
  }

  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), lex_less);
  std::sort(rs.simple_roots.begin(), rs.simple_roots.end(), lex_less);
  return rs;
}

bool RootSystem::contains_positive(const Root& r) const {
  auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), r, lex_less);
  return it != positive_roots.end() && same_root(*it, r);
}

CartanSpec dual_type(const CartanSpec& spec) {
  spec.validate();
  CartanSpec dual = spec;
  if (spec.family == Family::B) dual.family = Family::C;
  if (spec.family == Family::C) dual.family = Family::B;
  return dual;
}

namespace {

// Reflection of v in the hyperplane orthogonal to beta, as vectors in Z^n:
// v - 2 (v,beta)/(beta,beta) beta. Exact for crystallographic roots.
Root reflect_vector(const Root& beta, const Root& v) {
  const long long bb = beta.cast<long long>().dot(beta.cast<long long>());
  const long long vb = v.cast<long long>().dot(beta.cast<long long>());
  // 2*vb is always divisible by bb for roots of the same system.
  const long long c = 2 * vb / bb;
  return v - static_cast<int>(c) * beta;
}

}  // namespace

bool is_sub_root_system(const RootSystem& rs, const std::vector<Root>& subset) {
  for (const Root& r : subset) {
    if (!rs.contains_positive(r))
      throw ForeignRoot("subset entry " + root_to_string(r) +
                        " is not a positive root of the system");
  }
  auto contains = [&subset](const Root& r) {
    return std::any_of(subset.begin(), subset.end(),
                       [&r](const Root& s) { return same_root(s, r); });
  };
  for (const Root& beta : subset) {
    for (const Root& gamma : subset) {
      if (!contains(sign_normalized(reflect_vector(beta, gamma)))) return false;
    }
  }
  return true;
}

}  // namespace indrep
