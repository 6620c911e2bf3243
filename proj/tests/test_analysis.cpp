#include <random>

#include "doctest.h"
#include "linext/analysis.hpp"
#include "linext/errors.hpp"
#include "support.hpp"

using namespace linext;
using namespace testsupport;

TEST_CASE("case decomposition: reference instance (k=2, t=1)") {
  case_decomposition d = decompose_cases(2, 1);
  CHECK(d.counts[0] == 4761);  // 69 * 69
  CHECK(d.counts[1] == 7314);  // 106 * 69
  CHECK(d.counts[2] == 5291);  // 143 * 37
  CHECK(d.counts[0] + d.counts[1] + d.counts[2] == 17366);
  CHECK(d.probabilities[0] + d.probabilities[1] + d.probabilities[2] == 1);
}

TEST_CASE("case decomposition: partition sums and range checks") {
  case_decomposition d = decompose_cases(3, 1);
  CHECK(d.counts[0] + d.counts[1] + d.counts[2] == 2845162);

  CHECK_THROWS_AS(decompose_cases(1, 1), range_error);
  CHECK_THROWS_AS(decompose_cases(3, 0), range_error);
  CHECK_THROWS_AS(decompose_cases(3, 3), range_error);
}

TEST_CASE("case decomposition: products equal direct augmented counts") {
  for (int k = 2; k <= 4; ++k)
    for (int t = 1; t < k; ++t) {
      case_decomposition cases = decompose_cases(k, t);
      std::array<big_int, 3> direct = decompose_cases_direct(k, t);
      for (int c = 0; c < 3; ++c) CHECK(cases.counts[c] == direct[c]);
    }
}

TEST_CASE("asymptotic case probabilities") {
  std::array<quad6697, 3> limits = asymptotic_case_probabilities();
  CHECK(limits[0] + limits[1] + limits[2] == quad6697(1));
  CHECK(decimal_string(limits[0], 5) == "0.27427");
  CHECK(decimal_string(limits[1], 5) == "0.42124");
  CHECK(decimal_string(limits[2], 5) == "0.30449");
  for (const quad6697& limit : limits) CHECK(limit.sign() == 1);
}

TEST_CASE("finite case probabilities approach their limits") {
  // rate is set by min(t, s); at k = 6, t = 3 each gap is below 1e-6
  case_decomposition d = decompose_cases(6, 3);
  std::array<quad6697, 3> limits = asymptotic_case_probabilities();
  for (int c = 0; c < 3; ++c) {
    quad6697 gap = abs(quad6697(d.probabilities[c]) - limits[c]);
    CHECK((gap - quad6697(fraction(1, 1000000))).sign() < 0);
  }
}

TEST_CASE("tail probability ratios and gaps") {
  tail_gap t1 = tail_probability_check(1);
  CHECK(t1.ratio == fraction(69, 106));
  tail_gap t2 = tail_probability_check(2);
  CHECK(t2.ratio == fraction(11307, 17366));
  tail_gap t3 = tail_probability_check(3);
  CHECK(t3.ratio == fraction(1852485, 2845162));
  CHECK((abs(t3.gap) - quad6697(fraction(1, 100000000))).sign() < 0);
  CHECK_THROWS_AS(tail_probability_check(0), range_error);
}

TEST_CASE("delta sequence: exact values, frozen") {
  std::vector<convergence_row> rows = delta_sequence(2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].delta == fraction(37, 106));
  CHECK(rows[0].witness == std::pair<std::string, std::string>{"a1", "b1"});
  CHECK(rows[1].delta == fraction(6059, 17366));
  for (const convergence_row& row : rows) CHECK(row.gap.sign() >= 0);

  // k = 1 cross-checked against the independent tally oracle
  CHECK(rows[0].delta == balance_by_tally(build_family(5, 5)));
}

TEST_CASE("delta sequence: sweep order independence") {
  // recompute delta(P(5k,5k)) for k = 2, 3 with the pair sweep run backwards
  const fraction expected[2] = {fraction(6059, 17366), fraction(992677, 2845162)};
  for (int k = 2; k <= 3; ++k) {
    poset p = build_family(5 * k, 5 * k);
    fraction best(0);
    for (int i = p.size() - 1; i >= 0; --i)
      for (int j = p.size() - 1; j > i; --j) {
        if (!p.incomparable(i, j)) continue;
        fraction pr = precedence_probability(p, i, j);
        fraction complement = fraction(1) - pr;
        fraction minority = std::min(pr, complement);
        if (minority > best) best = minority;
      }
    CHECK(best == expected[k - 2]);
  }
}

TEST_CASE("dual preserves extension counts") {
  std::mt19937 rng(1234);
  for (int round = 0; round < 20; ++round) {
    poset p = random_poset(rng, 1 + round % 8, 0.35);
    CHECK(count_extensions(p) == count_extensions(p.dual()));
  }
}

TEST_CASE("t-chain-sum recognizer") {
  CHECK(is_t_chain_sum(make_t()));
  CHECK(is_t_chain_sum(make_chain(4)));       // all singleton blocks
  CHECK_FALSE(is_t_chain_sum(make_antichain(2)));
  CHECK_FALSE(is_t_chain_sum(build_poset({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}})));

  // singleton over the three-element block, both stackings
  poset above = build_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "d"}, {"b", "d"}, {"c", "d"}});
  CHECK(is_t_chain_sum(above));
  poset below = above.dual();
  CHECK(is_t_chain_sum(below));

  // two three-element blocks stacked
  poset stacked = build_poset(
      {"a", "b", "c", "d", "e", "f"},
      {{"a", "b"}, {"a", "d"}, {"b", "d"}, {"c", "d"}, {"a", "e"}, {"b", "e"},
       {"c", "e"}, {"a", "f"}, {"b", "f"}, {"c", "f"}, {"d", "e"}});
  CHECK(is_t_chain_sum(stacked));
  CHECK(balance_constant(stacked).delta == fraction(1, 3));
}

TEST_CASE("survey: up to three elements") {
  survey_report report = survey_small_posets(3);
  CHECK(report.classes_by_size == std::vector<long long>{0, 1, 2, 5});
  CHECK(report.has_nonchain);
  CHECK(report.min_nonchain_delta == fraction(1, 3));
  REQUIRE(report.achievers.size() == 1);
  CHECK(report.achievers[0].size == 3);
  CHECK(report.achievers[0].covers == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(report.achievers[0].t_chain_sum);
  CHECK(report.all_nonchains_ge_one_third);
  CHECK(report.all_nonchains_ge_general_bound);
  CHECK(report.achievers_all_t_chain_sums);
}

TEST_CASE("survey: two elements only has the antichain") {
  survey_report report = survey_small_posets(2);
  CHECK(report.classes_by_size == std::vector<long long>{0, 1, 2});
  CHECK(report.min_nonchain_delta == fraction(1, 2));
  REQUIRE(report.achievers.size() == 1);
  CHECK_FALSE(report.achievers[0].t_chain_sum);
  CHECK(report.achievers_all_t_chain_sums == false);
}

TEST_CASE("survey: up to five elements") {
  survey_report report = survey_small_posets(5);
  CHECK(report.classes_by_size == std::vector<long long>{0, 1, 2, 5, 16, 63});
  CHECK(report.min_nonchain_delta == fraction(1, 3));
  CHECK(report.achievers.size() == 6);  // 1 + 2 + 3 block arrangements
  for (const survey_class& c : report.achievers) CHECK(c.t_chain_sum);
  CHECK(report.all_nonchains_ge_one_third);
  CHECK(report.all_nonchains_ge_general_bound);
  CHECK(report.achievers_all_t_chain_sums);
}

TEST_CASE("survey: guards") {
  CHECK_THROWS_AS(survey_small_posets(0), range_error);
  CHECK_THROWS_AS(survey_small_posets(8), too_large_error);
}

TEST_CASE("general lower bound constant") {
  quad_number<5> bound = general_balance_lower_bound();
  CHECK(decimal_string(bound, 6) == "0.276393");
  CHECK((quad_number<5>(fraction(1, 3)) - bound).sign() == 1);  // 1/3 above it
}
