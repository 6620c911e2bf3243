// Command-line front end: exact linear-extension counts, precedence
// probabilities and balance constants for arbitrary finite posets, plus the
// two-chain family tooling (grid table, closed forms, slot decomposition,
// convergence rows, small-poset survey).

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "linext/analysis.hpp"
#include "linext/counting.hpp"
#include "linext/errors.hpp"
#include "linext/family.hpp"
#include "linext/poset_io.hpp"
#include "linext/quadratic.hpp"

namespace {

using nlohmann::json;
using namespace linext;

std::size_t ideal_budget_from_env() {
  const char* raw = std::getenv("LINEXT_IDEAL_BUDGET");
  if (raw == nullptr) return default_ideal_budget;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed == 0)
    throw parse_error("LINEXT_IDEAL_BUDGET must be a positive integer");
  return static_cast<std::size_t>(parsed);
}

int run_count(const std::string& file, bool as_json, std::size_t budget) {
  poset p = load_poset_file(file);
  big_int count = count_extensions(p, budget);
  if (as_json)
    std::cout << json{{"count", count.get_str()}}.dump() << "\n";
  else
    std::cout << count.get_str() << "\n";
  return 0;
}

int run_prob(const std::string& file, const std::string& x, const std::string& y,
             bool as_json, int digits, std::size_t budget) {
  poset p = load_poset_file(file);
  fraction pr = precedence_probability(p, p.index(x), p.index(y), budget);
  if (as_json)
    std::cout << json{{"x", x},
                      {"y", y},
                      {"probability", fraction_string(pr)},
                      {"decimal", decimal_string(pr, digits)}}
                     .dump()
              << "\n";
  else
    std::cout << "pr(" << x << " < " << y << ") = " << fraction_string(pr)
              << " (" << decimal_string(pr, digits) << ")\n";
  return 0;
}

int run_balance(const std::string& file, bool as_json, bool pairs, int digits,
                std::size_t budget) {
  poset p = load_poset_file(file);
  balance_report report = balance_constant(p, budget, pairs);
  if (as_json) {
    json doc{{"delta", fraction_string(report.delta)},
             {"decimal", decimal_string(report.delta, digits)}};
    if (report.witness) {
      auto [x, y] = *report.witness;
      doc["witness"] = {p.label(x), p.label(y)};
    } else {
      doc["witness"] = nullptr;
    }
    if (report.pair_probability) {
      json rows = json::array();
      for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
          if (i != j)
            rows.push_back({p.label(i), p.label(j),
                            fraction_string((*report.pair_probability)[i][j])});
      doc["pairs"] = rows;
    }
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "delta = " << fraction_string(report.delta) << " ("
              << decimal_string(report.delta, digits) << ")\n";
    if (report.witness) {
      auto [x, y] = *report.witness;
      std::cout << "witness = (" << p.label(x) << ", " << p.label(y) << ")\n";
    } else {
      std::cout << "witness = none\n";
    }
    if (report.pair_probability)
      for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
          if (i != j)
            std::cout << p.label(i) << '\t' << p.label(j) << '\t'
                      << fraction_string((*report.pair_probability)[i][j])
                      << "\n";
  }
  return 0;
}

int run_family(int m, int n, bool emit, const std::string& format,
               std::size_t budget) {
  poset p = build_family(m, n);
  if (emit) {
    if (format == "json")
      std::cout << poset_to_json(p);
    else
      std::cout << poset_to_text(p);
    return 0;
  }
  big_int count = count_extensions(p, budget);
  std::cout << "P(" << m << "," << n << "): " << p.size() << " elements, "
            << p.covers().size() << " covers, "
            << (is_admissible(m, n) ? "admissible" : "not admissible")
            << ", E = " << count.get_str() << "\n";
  return 0;
}

int run_table(int max, const std::string& format) {
  grid_table table(max, max);
  if (format == "json") {
    json cells = json::array();
    for (int m = 0; m <= max; ++m)
      for (int n = 0; n <= max; ++n) {
        if (m == 0 && n == 0) continue;
        cells.push_back({{"m", m},
                         {"n", n},
                         {"value", table.at(m, n).get_str()},
                         {"admissible", table.admissible(m, n)}});
      }
    std::cout << json{{"max", max}, {"cells", cells}}.dump() << "\n";
  } else {
    write_table_tsv(table, std::cout);
  }
  return 0;
}

int run_closed_form(long k, const std::string& format) {
  int worst = 0;
  grid_table grid(5 * static_cast<int>(k) + 4, 5 * static_cast<int>(k) + 4);
  json rows = json::array();
  if (format != "json")
    std::cout << "form\tm\tn\tclosed\tgrid\tstatus\n";
  for (const closed_form& form : closed_forms()) {
    if (k < form.min_k) continue;
    int m = 5 * static_cast<int>(k) + form.m_offset;
    int n = 5 * static_cast<int>(k) + form.n_offset;
    big_int closed = closed_form_value(form, k);
    const big_int& direct = grid.at(m, n);
    bool ok = closed == direct;
    if (!ok) worst = 3;
    if (format == "json")
      rows.push_back({{"form", form.id},
                      {"m", m},
                      {"n", n},
                      {"closed", closed.get_str()},
                      {"grid", direct.get_str()},
                      {"status", ok ? "OK" : "FAIL"}});
    else
      std::cout << form.id << '\t' << m << '\t' << n << '\t' << closed.get_str()
                << '\t' << direct.get_str() << '\t' << (ok ? "OK" : "FAIL")
                << "\n";
  }
  if (format == "json") std::cout << json{{"k", k}, {"rows", rows}}.dump() << "\n";
  return worst;
}

int run_converge(int k_max, int digits, const std::string& format,
                 std::size_t budget) {
  std::vector<convergence_row> rows = delta_sequence(k_max, budget);
  if (format == "json") {
    json out = json::array();
    for (const convergence_row& row : rows)
      out.push_back({{"k", row.k},
                     {"delta", fraction_string(row.delta)},
                     {"delta_decimal", decimal_string(row.delta, digits)},
                     {"gap", exact_string(row.gap)},
                     {"gap_decimal", decimal_string(row.gap, digits)},
                     {"witness", {row.witness.first, row.witness.second}}});
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "k\tdelta_exact\tdelta_decimal\tgap_decimal\twitness\n";
    for (const convergence_row& row : rows)
      std::cout << row.k << '\t' << fraction_string(row.delta) << '\t'
                << decimal_string(row.delta, digits) << '\t'
                << decimal_string(row.gap, digits) << '\t' << row.witness.first
                << ',' << row.witness.second << "\n";
  }
  return 0;
}

int run_decompose(int k, int t, const std::string& format, std::size_t budget) {
  case_decomposition cases = decompose_cases(k, t);
  std::array<big_int, 3> direct = decompose_cases_direct(k, t, budget);
  bool match = true;
  for (int c = 0; c < 3; ++c)
    if (direct[c] != cases.counts[c]) match = false;
  std::array<quad6697, 3> limits = asymptotic_case_probabilities();
  const std::array<std::string, 3> slot{
      "b" + std::to_string(5 * t - 1) + "..b" + std::to_string(5 * t),
      "b" + std::to_string(5 * t) + "..b" + std::to_string(5 * t + 1),
      "b" + std::to_string(5 * t + 1) + "..b" + std::to_string(5 * t + 2)};
  std::string pivot = "a" + std::to_string(5 * t + 1);

  if (format == "json") {
    json slots = json::array();
    for (int c = 0; c < 3; ++c)
      slots.push_back({{"slot", slot[c]},
                       {"count", cases.counts[c].get_str()},
                       {"direct_count", direct[c].get_str()},
                       {"probability", fraction_string(cases.probabilities[c])},
                       {"decimal", decimal_string(cases.probabilities[c], 6)},
                       {"limit", exact_string(limits[c])},
                       {"limit_decimal", decimal_string(limits[c], 5)}});
    std::cout << json{{"k", k}, {"t", t}, {"pivot", pivot},
                      {"cases", slots}, {"direct_match", match}}
                     .dump()
              << "\n";
  } else {
    std::cout << "P(" << 5 * k << "," << 5 * k << "), pivot " << pivot << ":\n";
    for (int c = 0; c < 3; ++c)
      std::cout << "slot " << slot[c] << ":\tcount = " << cases.counts[c].get_str()
                << "\tp = " << fraction_string(cases.probabilities[c]) << " ("
                << decimal_string(cases.probabilities[c], 6) << ")\tlimit "
                << decimal_string(limits[c], 5) << "\n";
    std::cout << "direct recount: " << (match ? "match" : "MISMATCH") << "\n";
  }
  if (!match) throw identity_error("slot products disagree with direct counts");
  return 0;
}

int run_survey(int n) {
  survey_report report = survey_small_posets(n);
  json by_size = json::object();
  for (int s = 1; s <= report.n_max; ++s)
    by_size[std::to_string(s)] = report.classes_by_size[s];
  json achievers = json::array();
  for (const survey_class& c : report.achievers) {
    json covers = json::array();
    for (auto [x, y] : c.covers) covers.push_back({x, y});
    achievers.push_back({{"size", c.size},
                         {"covers", covers},
                         {"delta", fraction_string(c.delta)},
                         {"t_chain_sum", c.t_chain_sum}});
  }
  json doc{{"n_max", report.n_max},
           {"classes_by_size", by_size},
           {"achievers", achievers},
           {"all_nonchains_ge_one_third", report.all_nonchains_ge_one_third},
           {"all_nonchains_ge_general_bound", report.all_nonchains_ge_general_bound},
           {"achievers_all_t_chain_sums", report.achievers_all_t_chain_sums},
           {"general_bound", exact_string(general_balance_lower_bound())},
           {"general_bound_decimal",
            decimal_string(general_balance_lower_bound(), 6)}};
  if (report.has_nonchain) {
    doc["min_nonchain_delta"] = fraction_string(report.min_nonchain_delta);
    doc["min_nonchain_delta_decimal"] =
        decimal_string(report.min_nonchain_delta, 6);
  } else {
    doc["min_nonchain_delta"] = nullptr;
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact linear-extension laboratory for finite posets and the "
               "two-chain family"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file, x, y;
  bool as_json = false, pairs = false, emit = false;
  int prob_digits = 6, balance_digits = 6, converge_digits = 12;
  int m = 0, n = 1, max = 15, k_max = 4, k = 2, t = 1, survey_n = 5;
  long form_k = 1;
  std::string format;

  auto* count_cmd = app.add_subcommand("count", "count linear extensions of a poset file");
  count_cmd->add_option("file", file)->required();
  count_cmd->add_flag("--json", as_json);
  count_cmd->callback([&] { action = [&] { return run_count(file, as_json, ideal_budget_from_env()); }; });

  auto* prob_cmd = app.add_subcommand("prob", "precedence probability pr(x < y)");
  prob_cmd->add_option("file", file)->required();
  prob_cmd->add_option("x", x)->required();
  prob_cmd->add_option("y", y)->required();
  prob_cmd->add_flag("--json", as_json);
  prob_cmd->add_option("--digits", prob_digits);
  prob_cmd->callback([&] { action = [&] { return run_prob(file, x, y, as_json, prob_digits, ideal_budget_from_env()); }; });

  auto* balance_cmd = app.add_subcommand("balance", "balance constant and witness pair");
  balance_cmd->add_option("file", file)->required();
  balance_cmd->add_flag("--json", as_json);
  balance_cmd->add_flag("--pairs", pairs, "include the full pr matrix");
  balance_cmd->add_option("--digits", balance_digits);
  balance_cmd->callback([&] { action = [&] { return run_balance(file, as_json, pairs, balance_digits, ideal_budget_from_env()); }; });

  auto* family_cmd = app.add_subcommand("family", "build the two-chain family poset P(m,n)");
  family_cmd->add_option("--m", m)->required();
  family_cmd->add_option("--n", n)->required();
  family_cmd->add_flag("--emit", emit, "write the poset instead of a summary");
  family_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  family_cmd->callback([&] { action = [&] { return run_family(m, n, emit, format, ideal_budget_from_env()); }; });

  auto* table_cmd = app.add_subcommand("table", "E(m,n) grid with admissibility flags");
  table_cmd->add_option("--max", max)->required();
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
  table_cmd->callback([&] { action = [&] { return run_table(max, format); }; });

  auto* form_cmd = app.add_subcommand("closed-form", "evaluate the thirteen closed forms against the grid");
  form_cmd->add_option("--k", form_k)->required();
  form_cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
  form_cmd->callback([&] { action = [&] { return run_closed_form(form_k, format); }; });

  auto* converge_cmd = app.add_subcommand("converge", "balance constants of P(5k,5k) and gaps to the limit");
  converge_cmd->add_option("--kmax", k_max)->required();
  converge_cmd->add_option("--digits", converge_digits);
  converge_cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
  converge_cmd->callback([&] { action = [&] { return run_converge(k_max, converge_digits, format, ideal_budget_from_env()); }; });

  auto* decompose_cmd = app.add_subcommand("decompose", "three-slot decomposition of E(5k,5k)");
  decompose_cmd->add_option("--k", k)->required();
  decompose_cmd->add_option("--t", t)->required();
  decompose_cmd->add_option("--format", format)->check(CLI::IsMember({"pretty", "json"}));
  decompose_cmd->callback([&] { action = [&] { return run_decompose(k, t, format, ideal_budget_from_env()); }; });

  auto* survey_cmd = app.add_subcommand("survey", "survey all posets on up to n elements");
  survey_cmd->add_option("--n", survey_n)->required();
  survey_cmd->callback([&] { action = [&] { return run_survey(survey_n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const ideal_budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const too_large_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const identity_error& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return 3;
  } catch (const non_integer_error& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
