#include "linext/counting.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "linext/errors.hpp"

namespace linext {

big_int count_extensions(const poset& p, std::size_t budget) {
  const int n = p.size();
  if (n == 0) throw range_error("cannot count extensions of an empty poset");

  // Path-count DP over the ideal lattice, one size level at a time.
  std::unordered_map<bitvec, big_int, bitvec_hash> level;
  level.emplace(bitvec(n), 1);
  std::size_t total_ideals = 1;
  if (total_ideals > budget) throw ideal_budget_error(budget);
  for (int size = 0; size < n; ++size) {
    std::unordered_map<bitvec, big_int, bitvec_hash> next;
    for (const auto& [ideal, paths] : level)
      for (int x = 0; x < n; ++x)
        if (!ideal.test(x) && p.below(x).is_subset_of(ideal)) {
          bitvec grown = ideal;
          grown.set(x);
          next[std::move(grown)] += paths;
        }
    total_ideals += next.size();
    if (total_ideals > budget) throw ideal_budget_error(budget);
    level = std::move(next);
  }
  return level.begin()->second;
}

big_int count_extensions_brute(const poset& p) {
  const int n = p.size();
  if (n == 0) throw range_error("cannot count extensions of an empty poset");
  if (n > 12)
    throw too_large_error("brute-force counting is limited to 12 elements");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  big_int total = 0;
  do {
    bitvec seen(n);
    bool ok = true;
    for (int x : perm) {
      if (!p.below(x).is_subset_of(seen)) {
        ok = false;
        break;
      }
      seen.set(x);
    }
    if (ok) ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

fraction precedence_probability(const poset& p, int x, int y, std::size_t budget) {
  if (x == y) throw same_element_error();
  if (p.less(x, y)) return 1;
  if (p.less(y, x)) return 0;
  big_int total = count_extensions(p, budget);
  big_int favourable = count_extensions(p.with_relation(x, y), budget);
  fraction pr(favourable, total);
  pr.canonicalize();
  return pr;
}

balance_report balance_constant(const poset& p, std::size_t budget,
                                bool want_pair_table) {
  const int n = p.size();
  if (n == 0) throw range_error("cannot balance an empty poset");

  balance_report report;
  report.delta = 0;
  if (want_pair_table)
    report.pair_probability.emplace(n, std::vector<fraction>(n, fraction(0)));
  if (n == 1) return report;

  big_int total = count_extensions(p, budget);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      fraction pr_ij;
      if (p.less(i, j))
        pr_ij = 1;
      else if (p.less(j, i))
        pr_ij = 0;
      else {
        big_int favourable = count_extensions(p.with_relation(i, j), budget);
        pr_ij = fraction(favourable, total);
        pr_ij.canonicalize();
        fraction complement = fraction(1) - pr_ij;
        fraction minority = std::min(pr_ij, complement);
        if (minority > report.delta) {
          report.delta = minority;
          report.witness = {i, j};
        }
      }
      if (want_pair_table) {
        (*report.pair_probability)[i][j] = pr_ij;
        (*report.pair_probability)[j][i] = fraction(1) - pr_ij;
      }
    }
  return report;
}

}  // namespace linext
