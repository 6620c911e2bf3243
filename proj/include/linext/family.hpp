#pragma once

#include <iosfwd>
#include <vector>

#include "linext/numbers.hpp"
#include "linext/poset.hpp"

namespace linext {

// The two-chain family: chains a_1 < ... < a_m and b_1 < ... < b_n with the
// master-poset covers a_i < b_{i+1} for i = 1,2,3,4 (mod 5) and b_j < a_{j+2}
// for j = 0,2,4 (mod 5). The pair poset is the INDUCED restriction of the
// infinite master poset, so relations may survive the removal of the chain
// elements that witnessed them (for instance a_5 < b_7 holds through the
// absent a_6 whenever m = 5 and n >= 7). Element labels are a1..am, b1..bn.
poset build_family(int m, int n);

// Order of the chain tops in the induced pair poset:
// -1 when a_m < b_n, +1 when a_m > b_n, 0 when incomparable.
int compare_chain_tops(int m, int n);

// Residue characterization of the pairs whose poset has no greatest element,
// i.e. the chain tops are incomparable and both recursion branches are live.
// Extends to the boundary (m or n zero), where only (0,1) and (1,0) qualify.
bool is_admissible(int m, int n);

// E(m, n) for the whole rectangle, by the top-element case recursion with
// base E(m, 0) = E(0, n) = 1. The recursion's comparison is read from the
// induced order, not from a residue table.
class grid_table {
 public:
  grid_table(int max_m, int max_n);

  int max_m() const { return mm_; }
  int max_n() const { return nn_; }

  // Throws undefined_at_origin at (0,0), range_error outside the rectangle.
  const big_int& at(int m, int n) const;

  bool admissible(int m, int n) const;

 private:
  int mm_, nn_;
  std::vector<big_int> values_;
};

// One-off E(m, n).
big_int grid_count(int m, int n);

// Verifies E(m+10, n+10) == 164 E(m+5, n+5) - 27 E(m, n) for an admissible
// pair. Throws not_admissible_error otherwise.
bool check_recurrence(int m, int n);

// "m\tn\tvalue\tadmissible" rows over the full rectangle, (0,0) skipped.
// Deterministic bytes.
void write_table_tsv(const grid_table& table, std::ostream& out);

}  // namespace linext
