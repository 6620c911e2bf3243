#include "linext/poset.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "linext/errors.hpp"

namespace linext {

int poset::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw unknown_label_error(std::string(name));
  return it->second;
}

void poset::close_and_reduce(const std::vector<std::vector<int>>& adjacency) {
  // Kahn toposort; doubles as the cycle check.
  std::vector<int> indegree(n_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y : adjacency[x]) ++indegree[y];
  std::vector<int> order;
  order.reserve(n_);
  for (int x = 0; x < n_; ++x)
    if (indegree[x] == 0) order.push_back(x);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int y : adjacency[order[head]])
      if (--indegree[y] == 0) order.push_back(y);
  if (static_cast<int>(order.size()) != n_) throw cycle_error();

  up_.assign(n_, bitvec(n_));
  down_.assign(n_, bitvec(n_));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    for (int y : adjacency[x]) {
      up_[x].set(y);
      up_[x] |= up_[y];
    }
  }
  for (int x = 0; x < n_; ++x)
    up_[x].for_each_bit([&](int y) { down_[y].set(x); });

  // Cover (x, y): x < y with nothing strictly between.
  covers_.clear();
  for (int x = 0; x < n_; ++x)
    up_[x].for_each_bit([&](int y) {
      if (!up_[x].intersects(down_[y])) covers_.emplace_back(x, y);
    });
  std::sort(covers_.begin(), covers_.end());
}

poset build_poset_indexed(std::vector<std::string> labels,
                          const std::vector<std::pair<int, int>>& relations) {
  poset p;
  p.n_ = static_cast<int>(labels.size());
  p.labels_ = std::move(labels);
  for (int i = 0; i < p.n_; ++i) {
    auto [it, fresh] = p.index_.emplace(p.labels_[i], i);
    if (!fresh) throw duplicate_label_error(p.labels_[i]);
  }

  std::vector<std::vector<int>> adjacency(p.n_);
  std::vector<std::unordered_set<int>> seen(p.n_);
  for (auto [x, y] : relations) {
    if (x == y) throw cycle_error();
    if (seen[x].insert(y).second) adjacency[x].push_back(y);
  }
  p.close_and_reduce(adjacency);
  return p;
}

poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& relations) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = index.emplace(labels[i], static_cast<int>(i));
    if (!fresh) throw duplicate_label_error(labels[i]);
  }
  std::vector<std::pair<int, int>> indexed;
  indexed.reserve(relations.size());
  for (const auto& [x, y] : relations) {
    auto ix = index.find(x);
    if (ix == index.end()) throw unknown_label_error(x);
    auto iy = index.find(y);
    if (iy == index.end()) throw unknown_label_error(y);
    indexed.emplace_back(ix->second, iy->second);
  }
  return build_poset_indexed(std::move(labels), indexed);
}

poset poset::with_relation(int x, int y) const {
  if (x == y || less(y, x)) throw cycle_error();
  poset q = *this;
  if (less(x, y)) return q;
  // New pairs: ({x} + below x) strictly under ({y} + above y).
  std::vector<int> lows{x}, highs{y};
  down_[x].for_each_bit([&](int u) { lows.push_back(u); });
  up_[y].for_each_bit([&](int v) { highs.push_back(v); });
  for (int u : lows)
    for (int v : highs) {
      q.up_[u].set(v);
      q.down_[v].set(u);
    }
  q.covers_.clear();
  for (int u = 0; u < q.n_; ++u)
    q.up_[u].for_each_bit([&](int v) {
      if (!q.up_[u].intersects(q.down_[v])) q.covers_.emplace_back(u, v);
    });
  std::sort(q.covers_.begin(), q.covers_.end());
  return q;
}

poset poset::dual() const {
  poset q = *this;
  std::swap(q.up_, q.down_);
  for (auto& [x, y] : q.covers_) std::swap(x, y);
  std::sort(q.covers_.begin(), q.covers_.end());
  return q;
}

bool poset::is_chain() const {
  for (int x = 0; x < n_; ++x)
    if (up_[x].count() + down_[x].count() != n_ - 1) return false;
  return true;
}

std::vector<int> poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (down_[x].none()) out.push_back(x);
  return out;
}

std::vector<int> poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (up_[x].none()) out.push_back(x);
  return out;
}

bool is_order_ideal(const poset& p, const bitvec& members) {
  for (int x = 0; x < p.size(); ++x)
    if (members.test(x) && !p.below(x).is_subset_of(members)) return false;
  return true;
}

void for_each_ideal(const poset& p, std::size_t cap,
                    const std::function<void(const order_ideal&)>& visit) {
  const int n = p.size();
  std::vector<bitvec> level{bitvec(n)};
  std::size_t total = 1;
  if (total > cap) throw ideal_budget_error(cap);
  for (int size = 0; size <= n; ++size) {
    for (const bitvec& ideal : level) visit(order_ideal{ideal});
    if (size == n) break;
    std::unordered_set<bitvec, bitvec_hash> next;
    for (const bitvec& ideal : level)
      for (int x = 0; x < n; ++x)
        if (!ideal.test(x) && p.below(x).is_subset_of(ideal)) {
          bitvec grown = ideal;
          grown.set(x);
          next.insert(std::move(grown));
        }
    total += next.size();
    if (total > cap) throw ideal_budget_error(cap);
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
}

std::vector<order_ideal> enumerate_ideals(const poset& p, std::size_t cap) {
  std::vector<order_ideal> out;
  for_each_ideal(p, cap, [&](const order_ideal& ideal) { out.push_back(ideal); });
  return out;
}

}  // namespace linext
