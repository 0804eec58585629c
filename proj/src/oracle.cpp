#include "indrep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace indrep::oracle {

namespace {

std::vector<WeylElement> sorted(std::vector<WeylElement> v) {
  std::sort(v.begin(), v.end(), one_line_less);
  return v;
}

std::vector<int> sorted_lines(const std::vector<WeylElement>& v) {
  std::vector<int> flat;
  for (const WeylElement& w : sorted(v)) {
    const auto line = w.one_line();
    flat.insert(flat.end(), line.begin(), line.end());
    flat.push_back(0);
  }
  return flat;
}

}  // namespace

std::vector<WeylElement> enumerate_weyl_direct(const CartanSpec& spec) {
  spec.validate();
  const int n = spec.ambient_dim();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<WeylElement> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (spec.family == Family::A && mask != 0) continue;
      if (spec.family == Family::D &&
          std::popcount(mask) % 2 != 0)
        continue;
      std::vector<int> signs(n, 1);
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) signs[j] = -1;
      }
      out.emplace_back(perm, std::move(signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sorted(std::move(out));
}

std::vector<WeylElement> stabilizer(const RootSystem& rs, const TorusCharacter& chi) {
  std::vector<WeylElement> fixers;
  for (const WeylElement& w : enumerate_weyl_direct(rs.spec)) {
    if (act(w, chi) == chi) fixers.push_back(w);
  }
  return fixers;
}

std::vector<Root> delta_prime(const RootSystem& rs, const TorusCharacter& chi) {
  std::vector<Root> zeros;
  for (const Root& beta : rs.positive_roots) {
    const WeylElement w_beta = reflection(rs, beta);
    if (act(w_beta, chi) == chi && rank_one_irreducible(rs, beta, chi))
      zeros.push_back(beta);
  }
  return zeros;
}

RGroupReport knapp_stein(const RootSystem& rs, const TorusCharacter& chi) {
  RGroupReport report;
  report.w_sigma = oracle::stabilizer(rs, chi);
  report.delta_prime = oracle::delta_prime(rs, chi);

  // Right-multiplication worklist closure with ordered-set membership.
  std::vector<WeylElement> generators;
  for (const Root& beta : report.delta_prime)
    generators.push_back(reflection(rs, beta));
  std::vector<WeylElement> closure{WeylElement::identity(rs.dim())};
  std::set<std::uint64_t> members{closure.front().code()};
  for (std::size_t next = 0; next < closure.size(); ++next) {
    const WeylElement current = closure[next];
    for (const WeylElement& g : generators) {
      WeylElement product = current.compose(g);
      if (members.insert(product.code()).second)
        closure.push_back(std::move(product));
    }
  }
  report.w_prime = sorted(std::move(closure));

  for (const WeylElement& w : report.w_sigma) {
    bool keeps_positive = true;
    for (const Root& beta : report.delta_prime) {
      if (!is_positive(w.apply(beta))) {
        keeps_positive = false;
        break;
      }
    }
    if (keeps_positive) report.r_group.push_back(w);
  }

  report.is_abelian =
      std::all_of(report.r_group.begin(), report.r_group.end(),
                  [&report](const WeylElement& a) {
                    return std::all_of(
                        report.r_group.begin(), report.r_group.end(),
                        [&a](const WeylElement& b) {
                          return a.compose(b) == b.compose(a);
                        });
                  });
  report.commuting_dim = report.r_group.size();
  report.component_count = report.r_group.size();
  report.multiplicities.assign(report.r_group.size(), 1);
  return report;
}

bool reports_match(const RGroupReport& a, const RGroupReport& b) {
  if (sorted_lines(a.w_sigma) != sorted_lines(b.w_sigma)) return false;
  if (sorted_lines(a.w_prime) != sorted_lines(b.w_prime)) return false;
  if (sorted_lines(a.r_group) != sorted_lines(b.r_group)) return false;
  if (a.delta_prime.size() != b.delta_prime.size()) return false;
  auto da = a.delta_prime, db = b.delta_prime;
  std::sort(da.begin(), da.end(), lex_less);
  std::sort(db.begin(), db.end(), lex_less);
  for (std::size_t k = 0; k < da.size(); ++k) {
    if (!same_root(da[k], db[k])) return false;
  }
  return a.component_count == b.component_count &&
         a.multiplicities == b.multiplicities;
}

}  // namespace indrep::oracle
