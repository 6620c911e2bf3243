#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "linext/numbers.hpp"
#include "linext/poset.hpp"

namespace linext {

// Exact number of linear extensions, as the number of maximal chains of the
// order-ideal lattice from the empty set to the full set. Polynomial for
// bounded-width posets; throws ideal_budget_error when the lattice blows up.
big_int count_extensions(const poset& p, std::size_t budget = default_ideal_budget);

// Oracle: filters all permutations. Guarded at 12 elements.
big_int count_extensions_brute(const poset& p);

// pr(x before y) over all linear extensions, as a reduced fraction.
// Comparable pairs return exactly 1 or 0; otherwise the poset augmented with
// x < y is recounted against the original.
fraction precedence_probability(const poset& p, int x, int y,
                                std::size_t budget = default_ideal_budget);

struct balance_report {
  fraction delta;  // max over pairs of min(pr(x<y), pr(y<x)); in [0, 1/2]
  std::optional<std::pair<int, int>> witness;  // absent for chains
  // pair_probability[x][y] = pr(x before y); diagonal left at 0.
  std::optional<std::vector<std::vector<fraction>>> pair_probability;
};

// Exact balance constant with the lexicographically smallest witness pair.
balance_report balance_constant(const poset& p,
                                std::size_t budget = default_ideal_budget,
                                bool want_pair_table = false);

}  // namespace linext
