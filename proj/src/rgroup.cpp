#include "indrep/rgroup.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace indrep {

namespace {

std::vector<WeylElement> subgroup_closure(int dim,
                                          const std::vector<WeylElement>& generators) {
  std::vector<WeylElement> elements{WeylElement::identity(dim)};
  std::unordered_set<std::uint64_t> visited{elements.front().code()};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    const WeylElement current = elements[next];
    for (const WeylElement& g : generators) {
      WeylElement candidate = g.compose(current);
      if (visited.insert(candidate.code()).second)
        elements.push_back(std::move(candidate));
    }
  }
  std::sort(elements.begin(), elements.end(), one_line_less);
  return elements;
}

bool contains(const std::vector<WeylElement>& sorted, const WeylElement& w) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), w, one_line_less);
  return it != sorted.end() && *it == w;
}

void require(bool ok, const char* what) {
  if (!ok) throw DecompositionViolation(what);
}

}  // namespace

RGroupReport knapp_stein(const RootSystem& rs, const TorusCharacter& chi,
                         int max_rank) {
  if (rs.spec.family == Family::B)
    throw UnsupportedFamily(
        "family B has no built-in rank-one rule for its short roots");
  chi.validate();

  RGroupReport report;
  report.w_sigma = stabilizer(rs, chi, max_rank);
  report.delta_prime = delta_prime(rs, chi);

  std::vector<WeylElement> generators;
  generators.reserve(report.delta_prime.size());
  for (const Root& beta : report.delta_prime)
    generators.push_back(reflection(rs, beta));
  report.w_prime = subgroup_closure(rs.dim(), generators);

  for (const WeylElement& w : report.w_sigma) {
    const bool preserves_positivity =
        std::all_of(report.delta_prime.begin(), report.delta_prime.end(),
                    [&w](const Root& beta) { return is_positive(w.apply(beta)); });
    if (preserves_positivity) report.r_group.push_back(w);
  }

  // W(chi) = R x| W'.
  std::vector<WeylElement> sorted_r = report.r_group;
  std::sort(sorted_r.begin(), sorted_r.end(), one_line_less);
  for (const WeylElement& w : report.w_prime) {
    require(w.is_identity() || !contains(sorted_r, w),
            "R and W' intersect nontrivially");
  }
  require(report.r_group.size() * report.w_prime.size() == report.w_sigma.size(),
          "|R| * |W'| != |W(chi)|");
  for (const WeylElement& w : report.w_sigma) {
    const WeylElement w_inv = w.inverse();
    for (const WeylElement& g : generators) {
      require(contains(report.w_prime, w.compose(g).compose(w_inv)),
              "W' is not normal in W(chi)");
    }
  }

  for (const WeylElement& r : report.r_group) {
    require(r.compose(r).is_identity(),
            "R contains an element that is not an involution");
  }
  report.is_abelian = true;  // a group of involutions is abelian
  report.commuting_dim = report.r_group.size();
  require(report.commuting_dim <= report.w_sigma.size(),
          "commuting dimension exceeds |W(chi)|");

  // Elementary abelian R: one character per element, all one-dimensional.
  report.component_count = report.r_group.size();
  report.multiplicities.assign(report.r_group.size(), 1);
  std::size_t square_sum = 0;
  for (int m : report.multiplicities) square_sum += static_cast<std::size_t>(m * m);
  require(square_sum == report.r_group.size(),
          "multiplicity squares do not sum to |R|");

  return report;
}

int keys_d_invariant(const TorusCharacter& chi) {
  std::set<CharValue> involutions;
  for (const CharValue& v : chi.values) {
    const auto p = value_predicates(chi.group, v);
    if (p.is_quadratic && !p.is_trivial) involutions.insert(v);
  }
  return static_cast<int>(involutions.size());
}

bool r_group_is_sign_changes(const RGroupReport& report) {
  return std::all_of(report.r_group.begin(), report.r_group.end(),
                     [](const WeylElement& w) { return w.is_sign_change_only(); });
}

}  // namespace indrep
