#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linext {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct duplicate_label_error : error {
  explicit duplicate_label_error(const std::string& label)
      : error("duplicate element label: " + label) {}
};

struct unknown_label_error : error {
  explicit unknown_label_error(const std::string& label)
      : error("unknown element label: " + label) {}
};

struct cycle_error : error {
  cycle_error() : error("relations contain a directed cycle") {}
};

struct same_element_error : error {
  same_element_error() : error("the two elements must be distinct") {}
};

// The order-ideal lattice is the DP state space; wide posets blow it up.
struct ideal_budget_error : error {
  explicit ideal_budget_error(std::size_t budget)
      : error("order-ideal lattice exceeds the budget of " +
              std::to_string(budget) + " states"),
        budget(budget) {}
  std::size_t budget;
};

struct too_large_error : error {
  using error::error;
};

struct empty_family_error : error {
  empty_family_error() : error("family pair (0,0) has no elements") {}
};

struct undefined_at_origin : error {
  undefined_at_origin() : error("E(0,0) is undefined") {}
};

struct not_admissible_error : error {
  not_admissible_error(int m, int n)
      : error("pair (" + std::to_string(m) + "," + std::to_string(n) +
              ") is not admissible") {}
};

struct non_integer_error : error {
  using error::error;
};

struct range_error : error {
  using error::error;
};

struct division_by_zero : error {
  division_by_zero() : error("division by zero") {}
};

// An exact identity that must hold by construction failed; indicates a bug,
// not bad input.
struct identity_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

}  // namespace linext
