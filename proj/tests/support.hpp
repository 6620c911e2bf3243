#pragma once

// Shared test fixtures and independent oracles. Everything here is test-only
// and deliberately avoids the library's counting path: ideals by subset
// filtering, extensions by direct sequence enumeration.

#include <random>
#include <string>
#include <vector>

#include "linext/counting.hpp"
#include "linext/poset.hpp"

namespace testsupport {

using linext::big_int;
using linext::bitvec;
using linext::fraction;
using linext::poset;

inline poset make_chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> relations;
  for (int i = 1; i <= n; ++i) labels.push_back("c" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    relations.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
  return linext::build_poset(std::move(labels), relations);
}

inline poset make_antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return linext::build_poset(std::move(labels), {});
}

// Three elements a, b, c with the single relation a < b.
inline poset make_t() {
  return linext::build_poset({"a", "b", "c"}, {{"a", "b"}});
}

// Every downward-closed subset, found by filtering all 2^n subsets.
inline std::vector<bitvec> ideals_by_subset_filter(const poset& p) {
  const int n = p.size();
  std::vector<bitvec> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bitvec candidate(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1ul << i)) candidate.set(i);
    if (linext::is_order_ideal(p, candidate)) out.push_back(candidate);
  }
  return out;
}

struct extension_tally {
  big_int total = 0;
  // before[x][y] = number of extensions placing x before y
  std::vector<std::vector<big_int>> before;
};

namespace detail {
inline void tally_rec(const poset& p, bitvec& placed, std::vector<int>& sequence,
                      extension_tally& tally) {
  const int n = p.size();
  if (static_cast<int>(sequence.size()) == n) {
    tally.total += 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        tally.before[sequence[i]][sequence[j]] += 1;
    return;
  }
  for (int x = 0; x < n; ++x) {
    if (placed.test(x) || !p.below(x).is_subset_of(placed)) continue;
    placed.set(x);
    sequence.push_back(x);
    tally_rec(p, placed, sequence, tally);
    sequence.pop_back();
    placed.reset(x);
  }
}
}  // namespace detail

// Enumerates every linear extension explicitly and tallies pair precedences.
inline extension_tally tally_extensions(const poset& p) {
  extension_tally tally;
  tally.before.assign(p.size(), std::vector<big_int>(p.size(), big_int(0)));
  bitvec placed(p.size());
  std::vector<int> sequence;
  detail::tally_rec(p, placed, sequence, tally);
  return tally;
}

// Balance constant straight from the tally.
inline fraction balance_by_tally(const poset& p) {
  extension_tally tally = tally_extensions(p);
  fraction best(0);
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j) {
      const big_int& minority = std::min(tally.before[i][j], tally.before[j][i]);
      fraction value(minority, tally.total);
      value.canonicalize();
      if (value > best) best = value;
    }
  return best;
}

// Random poset: each pair (i, j) with i < j related with the given
// probability, then transitively closed by the builder.
inline poset random_poset(std::mt19937& rng, int n, double edge_probability) {
  std::bernoulli_distribution flip(edge_probability);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) relations.emplace_back(i, j);
  return linext::build_poset_indexed(std::move(labels), relations);
}

}  // namespace testsupport
