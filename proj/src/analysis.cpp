#include "linext/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "linext/errors.hpp"

namespace linext {

namespace {

int a_index(int i) { return i - 1; }
int b_index(int k, int j) { return 5 * k + j - 1; }

fraction exact_ratio(const big_int& num, const big_int& den) {
  fraction q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

case_decomposition decompose_cases(int k, int t) {
  if (k < 2 || t < 1 || t > k - 1)
    throw range_error("case decomposition needs 1 <= t <= k-1 and k >= 2");
  const int s = k - t;
  grid_table grid(5 * k, 5 * k);

  // In the low slot the top factor steps down the a-chain for free.
  if (grid.at(5 * s + 1, 5 * s - 1) != grid.at(5 * s, 5 * s - 1))
    throw identity_error("E(5s+1, 5s-1) != E(5s, 5s-1)");

  case_decomposition result;
  result.k = k;
  result.t = t;
  result.counts = {
      grid.at(5 * t, 5 * t - 1) * grid.at(5 * s + 1, 5 * s - 1),
      grid.at(5 * t, 5 * t) * grid.at(5 * s, 5 * s - 1),
      grid.at(5 * t, 5 * t + 1) * grid.at(5 * s - 1, 5 * s - 1),
  };
  const big_int& total = grid.at(5 * k, 5 * k);
  if (result.counts[0] + result.counts[1] + result.counts[2] != total)
    throw identity_error("slot counts do not partition E(5k, 5k)");
  for (int c = 0; c < 3; ++c)
    result.probabilities[c] = exact_ratio(result.counts[c], total);
  return result;
}

std::array<big_int, 3> decompose_cases_direct(int k, int t, std::size_t budget) {
  if (k < 2 || t < 1 || t > k - 1)
    throw range_error("case decomposition needs 1 <= t <= k-1 and k >= 2");
  poset p = build_family(5 * k, 5 * k);
  const int pivot = a_index(5 * t + 1);
  poset low = p.with_relation(pivot, b_index(k, 5 * t));
  poset mid = p.with_relation(b_index(k, 5 * t), pivot)
                  .with_relation(pivot, b_index(k, 5 * t + 1));
  poset high = p.with_relation(b_index(k, 5 * t + 1), pivot);
  return {count_extensions(low, budget), count_extensions(mid, budget),
          count_extensions(high, budget)};
}

std::array<quad6697, 3> asymptotic_case_probabilities() {
  return {quad6697{fraction(1, 3), fraction(-29, 40182)},
          quad6697{fraction(1, 6), fraction(125, 40182)},
          quad6697{fraction(1, 2), fraction(-16, 6697)}};
}

tail_gap tail_probability_check(int k) {
  if (k < 1) throw range_error("tail probability needs k >= 1");
  grid_table grid(5 * k, 5 * k);
  fraction ratio = exact_ratio(grid.at(5 * k, 5 * k - 1), grid.at(5 * k, 5 * k));
  quad6697 gap = quad6697(ratio) - one_minus_kappa();
  return {k, ratio, gap};
}

std::vector<convergence_row> delta_sequence(int k_max, std::size_t budget) {
  if (k_max < 1) throw range_error("delta sequence needs k_max >= 1");
  std::vector<convergence_row> rows;
  rows.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    poset p = build_family(5 * k, 5 * k);
    balance_report report = balance_constant(p, budget);
    auto [x, y] = report.witness.value();
    rows.push_back({k,
                    report.delta,
                    {p.label(x), p.label(y)},
                    abs(quad6697(report.delta) - kappa())});
  }
  return rows;
}

bool is_t_chain_sum(const poset& p) {
  const int n = p.size();
  if (n == 0) return false;
  // Cut points of the finest linear-sum decomposition are prefixes of any
  // linear extension.
  std::vector<int> order;
  order.reserve(n);
  bitvec placed(n);
  while (static_cast<int>(order.size()) < n)
    for (int x = 0; x < n; ++x)
      if (!placed.test(x) && p.below(x).is_subset_of(placed)) {
        placed.set(x);
        order.push_back(x);
      }

  bitvec block(n), prefix(n);
  int block_size = 0;
  for (int pos = 0; pos < n; ++pos) {
    block.set(order[pos]);
    prefix.set(order[pos]);
    ++block_size;
    bool cut = true;
    for (int x = 0; x < n && cut; ++x)
      if (!prefix.test(x) && !prefix.is_subset_of(p.below(x))) cut = false;
    if (!cut) continue;
    // Block complete; a valid block is a singleton or a one-relation triple.
    if (block_size != 1) {
      if (block_size != 3) return false;
      int relations = 0;
      block.for_each_bit([&](int x) {
        bitvec above_in_block = p.above(x);
        above_in_block &= block;
        relations += above_in_block.count();
      });
      if (relations != 1) return false;
    }
    block = bitvec(n);
    block_size = 0;
  }
  return true;
}

quad_number<5> general_balance_lower_bound() {
  return {fraction(1, 2), fraction(-1, 10)};
}

namespace {

// Small-poset enumeration. Posets are generated with a fixed linear
// extension as labeling (element j's strict down-set is an order ideal of
// the part already built), then deduplicated by the minimal relation matrix
// over all relabelings. Encoding: row i in byte i of a 64-bit word, bit j
// set when i < j.
constexpr int survey_limit = 7;

using down_masks = std::array<std::uint8_t, survey_limit>;

struct relabeling {
  std::array<int, survey_limit> old_of_new;
  std::array<std::uint8_t, 128> map_bits;  // mask -> relabeled mask
};

std::vector<relabeling> relabelings_for(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<relabeling> out;
  do {
    relabeling r{};
    for (int i = 0; i < n; ++i) r.old_of_new[perm[i]] = i;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::uint8_t image = 0;
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) image |= std::uint8_t(1) << perm[j];
      r.map_bits[mask] = image;
    }
    out.push_back(r);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t canonical_encoding(const std::array<std::uint8_t, survey_limit>& up,
                                 int n, const std::vector<relabeling>& relabelings) {
  std::uint64_t best = ~std::uint64_t{0};
  for (const relabeling& r : relabelings) {
    std::uint64_t enc = 0;
    for (int row = 0; row < n; ++row)
      enc |= std::uint64_t(r.map_bits[up[r.old_of_new[row]]]) << (8 * row);
    best = std::min(best, enc);
  }
  return best;
}

void generate_natural(int n, int j, down_masks& down,
                      const std::function<void(const down_masks&)>& emit) {
  if (j == n) {
    emit(down);
    return;
  }
  for (unsigned mask = 0; mask < (1u << j); ++mask) {
    bool ideal = true;
    for (int x = 0; x < j && ideal; ++x)
      if ((mask & (1u << x)) && (down[x] & ~mask)) ideal = false;
    if (!ideal) continue;
    down[j] = static_cast<std::uint8_t>(mask);
    generate_natural(n, j + 1, down, emit);
  }
}

poset poset_from_encoding(std::uint64_t enc, int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) {
    auto row = static_cast<std::uint8_t>(enc >> (8 * i));
    for (int j = 0; j < n; ++j)
      if (row & (std::uint8_t(1) << j)) relations.emplace_back(i, j);
  }
  return build_poset_indexed(std::move(labels), relations);
}

}  // namespace

survey_report survey_small_posets(int n_max) {
  if (n_max < 1) throw range_error("survey needs n_max >= 1");
  if (n_max > survey_limit)
    throw too_large_error("survey supports at most " +
                          std::to_string(survey_limit) + " elements");

  survey_report report;
  report.n_max = n_max;
  report.classes_by_size.assign(n_max + 1, 0);
  report.has_nonchain = false;
  report.min_nonchain_delta = 0;
  report.all_nonchains_ge_one_third = true;
  report.all_nonchains_ge_general_bound = true;
  report.achievers_all_t_chain_sums = true;

  const quad_number<5> bound = general_balance_lower_bound();
  std::vector<survey_class> candidates;

  for (int n = 1; n <= n_max; ++n) {
    std::vector<relabeling> relabelings = relabelings_for(n);
    std::unordered_set<std::uint64_t> canon;
    down_masks down{};
    generate_natural(n, 0, down, [&](const down_masks& d) {
      std::array<std::uint8_t, survey_limit> up{};
      for (int j = 0; j < n; ++j)
        for (int x = 0; x < j; ++x)
          if (d[j] & (std::uint8_t(1) << x)) up[x] |= std::uint8_t(1) << j;
      canon.insert(canonical_encoding(up, n, relabelings));
    });
    report.classes_by_size[n] = static_cast<long long>(canon.size());

    std::vector<std::uint64_t> encodings(canon.begin(), canon.end());
    std::sort(encodings.begin(), encodings.end());

    // Balance sweeps are pure; evaluate classes in parallel, merge by index.
    std::vector<survey_class> classes(encodings.size());
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> tasks;
    std::size_t chunk = (encodings.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = w * chunk, hi = std::min(encodings.size(), lo + chunk);
      if (lo >= hi) break;
      tasks.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (std::size_t idx = lo; idx < hi; ++idx) {
          poset p = poset_from_encoding(encodings[idx], n);
          balance_report balance = balance_constant(p);
          classes[idx] = {n, p.covers(), balance.delta, p.is_chain(),
                          is_t_chain_sum(p)};
        }
      }));
    }
    for (auto& task : tasks) task.get();
    for (auto& c : classes) candidates.push_back(std::move(c));
  }

  for (const survey_class& c : candidates) {
    if (c.chain) continue;
    if (!report.has_nonchain || c.delta < report.min_nonchain_delta) {
      report.has_nonchain = true;
      report.min_nonchain_delta = c.delta;
    }
    if (c.delta < fraction(1, 3)) report.all_nonchains_ge_one_third = false;
    if ((quad_number<5>(c.delta) - bound).sign() < 0)
      report.all_nonchains_ge_general_bound = false;
  }
  if (report.has_nonchain)
    for (const survey_class& c : candidates)
      if (!c.chain && c.delta == report.min_nonchain_delta) {
        if (!c.t_chain_sum) report.achievers_all_t_chain_sums = false;
        report.achievers.push_back(c);
      }
  return report;
}

}  // namespace linext
