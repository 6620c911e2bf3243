#include "linext/family.hpp"

#include <ostream>
#include <string>

#include "linext/errors.hpp"

namespace linext {

namespace {

// Truncation of the master poset large enough to carry every relation
// between elements of the (m, n) restriction: witnesses of a relation never
// need indices beyond max(m, n) + 2.
struct master_closure {
  explicit master_closure(int length) : length(length), up(2 * length, bitvec(2 * length)) {
    // ids: a_i -> i - 1, b_j -> length + j - 1
    auto a_id = [&](int i) { return i - 1; };
    auto b_id = [&](int j) { return length + j - 1; };
    std::vector<std::vector<int>> succ(2 * length);
    for (int i = 1; i < length; ++i) {
      succ[a_id(i)].push_back(a_id(i + 1));
      succ[b_id(i)].push_back(b_id(i + 1));
    }
    for (int i = 1; i + 1 <= length; ++i)
      if (i % 5 != 0) succ[a_id(i)].push_back(b_id(i + 1));
    for (int j = 1; j + 2 <= length; ++j)
      if (j % 5 == 0 || j % 5 == 2 || j % 5 == 4)
        succ[b_id(j)].push_back(a_id(j + 2));
    // Successor chain indices strictly increase, so sweeping both chains by
    // descending index closes the relation in one pass.
    for (int idx = length; idx >= 1; --idx)
      for (int id : {a_id(idx), b_id(idx)})
        for (int s : succ[id]) {
          up[id].set(s);
          up[id] |= up[s];
        }
  }

  int a_id(int i) const { return i - 1; }
  int b_id(int j) const { return length + j - 1; }

  int length;
  std::vector<bitvec> up;
};

int compare_tops(const master_closure& master, int m, int n) {
  if (master.up[master.a_id(m)].test(master.b_id(n))) return -1;
  if (master.up[master.b_id(n)].test(master.a_id(m))) return 1;
  return 0;
}

}  // namespace

poset build_family(int m, int n) {
  if (m < 0 || n < 0) throw range_error("family sizes must be nonnegative");
  if (m == 0 && n == 0) throw empty_family_error();
  master_closure master(std::max(m, n) + 2);

  std::vector<std::string> labels;
  std::vector<int> kept;  // master ids in label order
  labels.reserve(m + n);
  for (int i = 1; i <= m; ++i) {
    labels.push_back("a" + std::to_string(i));
    kept.push_back(master.a_id(i));
  }
  for (int j = 1; j <= n; ++j) {
    labels.push_back("b" + std::to_string(j));
    kept.push_back(master.b_id(j));
  }

  std::vector<std::pair<int, int>> relations;
  for (int x = 0; x < m + n; ++x)
    for (int y = 0; y < m + n; ++y)
      if (x != y && master.up[kept[x]].test(kept[y])) relations.emplace_back(x, y);
  return build_poset_indexed(std::move(labels), relations);
}

int compare_chain_tops(int m, int n) {
  if (m < 1 || n < 1) throw range_error("compare_chain_tops needs m, n >= 1");
  master_closure master(std::max(m, n) + 2);
  return compare_tops(master, m, n);
}

bool is_admissible(int m, int n) {
  if (m < 0 || n < 0) return false;
  if (m == 0 && n == 0) return false;
  switch (m % 5) {
    case 0: return n >= m - 2 && n <= m + 1;
    case 1: return n == m - 1 || n == m;
    case 2: return n == m - 1 || n == m;
    case 3: return n >= m - 2 && n <= m;
    case 4: return n == m - 1 || n == m;
  }
  return false;
}

grid_table::grid_table(int max_m, int max_n) : mm_(max_m), nn_(max_n) {
  if (max_m < 0 || max_n < 0) throw range_error("grid bounds must be nonnegative");
  master_closure master(std::max(max_m, max_n) + 2);
  values_.assign(static_cast<std::size_t>(mm_ + 1) * (nn_ + 1), big_int(0));
  auto cell = [&](int m, int n) -> big_int& {
    return values_[static_cast<std::size_t>(m) * (nn_ + 1) + n];
  };
  for (int m = 1; m <= mm_; ++m) cell(m, 0) = 1;
  for (int n = 1; n <= nn_; ++n) cell(0, n) = 1;
  for (int m = 1; m <= mm_; ++m)
    for (int n = 1; n <= nn_; ++n) {
      int c = compare_tops(master, m, n);
      if (c > 0)
        cell(m, n) = cell(m - 1, n);
      else if (c < 0)
        cell(m, n) = cell(m, n - 1);
      else
        cell(m, n) = cell(m - 1, n) + cell(m, n - 1);
    }
}

const big_int& grid_table::at(int m, int n) const {
  if (m == 0 && n == 0) throw undefined_at_origin();
  if (m < 0 || n < 0 || m > mm_ || n > nn_)
    throw range_error("grid cell (" + std::to_string(m) + "," +
                      std::to_string(n) + ") is outside the table");
  return values_[static_cast<std::size_t>(m) * (nn_ + 1) + n];
}

bool grid_table::admissible(int m, int n) const {
  return is_admissible(m, n);
}

big_int grid_count(int m, int n) {
  if (m == 0 && n == 0) throw undefined_at_origin();
  if (m < 0 || n < 0) throw range_error("grid indices must be nonnegative");
  return grid_table(m, n).at(m, n);
}

bool check_recurrence(int m, int n) {
  if (!is_admissible(m, n)) throw not_admissible_error(m, n);
  grid_table table(m + 10, n + 10);
  return table.at(m + 10, n + 10) ==
         164 * table.at(m + 5, n + 5) - 27 * table.at(m, n);
}

void write_table_tsv(const grid_table& table, std::ostream& out) {
  out << "m\tn\tvalue\tadmissible\n";
  for (int m = 0; m <= table.max_m(); ++m)
    for (int n = 0; n <= table.max_n(); ++n) {
      if (m == 0 && n == 0) continue;
      out << m << '\t' << n << '\t' << table.at(m, n).get_str() << '\t'
          << (table.admissible(m, n) ? 1 : 0) << '\n';
    }
}

}  // namespace linext
