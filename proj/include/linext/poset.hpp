#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linext/bits.hpp"

namespace linext {

inline constexpr std::size_t default_ideal_budget = 10'000'000;

// A finite poset over densely indexed elements. Labels are presentation
// only; all structure lives in the strict-comparability closure, stored as
// one bitset row per element in each direction. Immutable once built.
class poset {
 public:
  poset() = default;

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  // Throws unknown_label_error.
  int index(std::string_view name) const;

  // Strict order x < y. less(x, x) is always false.
  bool less(int x, int y) const { return up_[x].test(y); }
  bool less(std::string_view x, std::string_view y) const {
    return less(index(x), index(y));
  }
  bool incomparable(int x, int y) const {
    return x != y && !less(x, y) && !less(y, x);
  }

  const bitvec& above(int x) const { return up_[x]; }
  const bitvec& below(int x) const { return down_[x]; }

  // Transitive reduction of the closure, sorted by (smaller, larger) index.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // New poset with x < y added (closure extended). Throws cycle_error if
  // y <= x already holds; a no-op copy if x < y already holds.
  poset with_relation(int x, int y) const;

  // All relations reversed. Involution; preserves linear extension counts.
  poset dual() const;

  bool is_chain() const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  friend poset build_poset(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& relations);
  friend poset build_poset_indexed(std::vector<std::string> labels,
                                   const std::vector<std::pair<int, int>>& relations);

 private:
  void close_and_reduce(const std::vector<std::vector<int>>& adjacency);

  int n_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<bitvec> up_;    // up_[x] = { y : x < y }
  std::vector<bitvec> down_;  // down_[x] = { y : y < x }
  std::vector<std::pair<int, int>> covers_;
};

// Builds a poset from labels and arbitrary strict relations (not necessarily
// covers; the transitive reduction is recomputed). Element indices follow
// label declaration order. Throws duplicate_label_error, unknown_label_error,
// cycle_error.
poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& relations);

poset build_poset_indexed(std::vector<std::string> labels,
                          const std::vector<std::pair<int, int>>& relations);

// An order ideal (downset): member set closed downward under the order.
struct order_ideal {
  bitvec members;
};

bool is_order_ideal(const poset& p, const bitvec& members);

// Visits every order ideal exactly once, from the empty set to the full set,
// in nondecreasing size and deterministic order within each size. Throws
// ideal_budget_error once more than `cap` distinct ideals exist.
void for_each_ideal(const poset& p, std::size_t cap,
                    const std::function<void(const order_ideal&)>& visit);

std::vector<order_ideal> enumerate_ideals(const poset& p,
                                          std::size_t cap = default_ideal_budget);

}  // namespace linext
