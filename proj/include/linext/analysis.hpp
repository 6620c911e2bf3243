#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "linext/counting.hpp"
#include "linext/family.hpp"
#include "linext/quadratic.hpp"

namespace linext {

// Where a_{5t+1} can sit relative to the b-chain in an extension of
// P(5k, 5k): the three slots between b_{5t-1} and b_{5t+2}. Adding the slot
// relations splits the poset into a linear sum, so each count is a product
// of two grid values.
struct case_decomposition {
  int k;
  int t;
  std::array<big_int, 3> counts;          // partition of E(5k, 5k)
  std::array<fraction, 3> probabilities;  // counts / E(5k, 5k), sum to 1
};

// Product-formula counts, with the partition identity verified internally.
// Requires 1 <= t <= k-1.
case_decomposition decompose_cases(int k, int t);

// The same three counts obtained by adding the slot relations to the actual
// poset and recounting. Must match decompose_cases exactly.
std::array<big_int, 3> decompose_cases_direct(int k, int t,
                                              std::size_t budget = default_ideal_budget);

// Exact k -> infinity limits of the three slot probabilities. They sum to 1;
// decimals are approximately 0.27427, 0.42124, 0.30449.
std::array<quad6697, 3> asymptotic_case_probabilities();

struct tail_gap {
  int k;
  fraction ratio;  // E(5k, 5k-1) / E(5k, 5k)
  quad6697 gap;    // ratio - (1 - kappa), signed
};

tail_gap tail_probability_check(int k);

struct convergence_row {
  int k;
  fraction delta;  // exact balance constant of P(5k, 5k)
  std::pair<std::string, std::string> witness;
  quad6697 gap;  // |delta - kappa|, exact
};

std::vector<convergence_row> delta_sequence(int k_max,
                                            std::size_t budget = default_ideal_budget);

// True when the poset is a linear sum of singleton blocks and 3-element
// one-relation blocks. Such sums have balance constant exactly 1/3 as soon
// as one 3-element block appears.
bool is_t_chain_sum(const poset& p);

// (5 - sqrt(5))/10, the proven lower bound for non-chain balance constants.
quad_number<5> general_balance_lower_bound();

struct survey_class {
  int size;
  std::vector<std::pair<int, int>> covers;  // transitive reduction, by index
  fraction delta;
  bool chain;
  bool t_chain_sum;
};

struct survey_report {
  int n_max;
  std::vector<long long> classes_by_size;  // index s = posets on s elements
  bool has_nonchain;
  fraction min_nonchain_delta;
  std::vector<survey_class> achievers;  // non-chains attaining the minimum
  bool all_nonchains_ge_one_third;
  bool all_nonchains_ge_general_bound;
  bool achievers_all_t_chain_sums;
};

// Enumerates every poset on at most n_max elements up to isomorphism
// (canonical form: minimal relation matrix over all relabelings) and sweeps
// their balance constants. Guarded at 7 elements.
survey_report survey_small_posets(int n_max);

}  // namespace linext
