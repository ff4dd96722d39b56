#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_set>

#include "CLI11.hpp"
#include "cgt/dyadic_forms.hpp"
#include "cgt/notation.hpp"
#include "cgt/numbers.hpp"
#include "cgt/order.hpp"
#include "cgt/reduction.hpp"
#include "cgt/rulesets.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

std::string eval_string(cgt::Game g) {
  if (auto v = cgt::value_of(g)) return v->str();
  return cgt::print_form(cgt::canonicalize(g), true);
}

ordered_json classification_json(cgt::Game g) {
  cgt::Classification c = cgt::classify(g);
  ordered_json j;
  j["outcome"] = cgt::to_string(c.outcome);
  j["birthday"] = c.birthday;
  j["is_number"] = c.is_number;
  j["value"] = c.value ? ordered_json(c.value->str()) : ordered_json(nullptr);
  j["is_c_number"] = c.is_c_number;
  j["is_s_number"] = c.is_s_number;
  j["is_zugzwang"] = c.is_zugzwang;
  j["is_weak_zugzwang"] = c.is_weak_zugzwang;
  j["is_dicotic"] = c.is_dicotic;
  j["is_infinitesimal"] = c.is_infinitesimal;
  j["canonical"] = cgt::print_form(cgt::canonicalize(g), true);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic engine for short partizan games"};
  app.require_subcommand(1);

  std::string expr_text, expr_text2, probe_text, ruleset_text;
  int day = 2, max_options = 2;
  bool stats = false;

  auto* cmd_eval = app.add_subcommand("eval", "Evaluate an expression to its value or canonical form");
  cmd_eval->add_option("expr", expr_text)->required();

  auto* cmd_canon = app.add_subcommand("canon", "Canonical form of an expression");
  cmd_canon->add_option("expr", expr_text)->required();

  auto* cmd_cmp = app.add_subcommand("cmp", "Compare two games: < > = ||");
  cmd_cmp->add_option("lhs", expr_text)->required();
  cmd_cmp->add_option("rhs", expr_text2)->required();

  auto* cmd_classify = app.add_subcommand("classify", "Full classification as JSON");
  cmd_classify->add_option("expr", expr_text)->required();

  auto* cmd_fitting = app.add_subcommand("fitting", "Fitting-set queries");
  cmd_fitting->add_option("expr", expr_text)->required();
  auto* probe_opt = cmd_fitting->add_option("--probe", probe_text, "Probe a dyadic for membership");

  auto* cmd_ruleset = app.add_subcommand("ruleset", "Evaluate a concrete position");
  auto* cmd_hack = cmd_ruleset->add_subcommand("hackenbush", "Blue-Red Hackenbush stalks, e.g. \"BR BB\"");
  cmd_hack->add_option("position", ruleset_text)->required();
  auto* cmd_topp = cmd_ruleset->add_subcommand("toppling", "Toppling Dominoes row, e.g. \"LRL\"");
  cmd_topp->add_option("position", ruleset_text)->required();
  cmd_ruleset->require_subcommand(1);

  auto* cmd_scan = app.add_subcommand("scan", "Open-problem scans over the enumeration");
  auto* scan_wz = cmd_scan->add_subcommand("weak-zugzwang", "Weak zugzwangs that are not numbers");
  auto* scan_gap = cmd_scan->add_subcommand("inf-right-gap", "Positive infinitesimals with G < G^R");
  for (auto* sc : {scan_wz, scan_gap}) {
    sc->add_option("--day", day)->required();
    sc->add_option("--max-options", max_options);
  }
  cmd_scan->require_subcommand(1);

  auto* cmd_enum = app.add_subcommand("enumerate", "Enumeration statistics");
  cmd_enum->add_option("--day", day)->required();
  cmd_enum->add_option("--max-options", max_options);
  cmd_enum->add_flag("--stats", stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (cmd_eval->parsed()) {
      std::cout << eval_string(cgt::parse_game(expr_text)) << "\n";
    } else if (cmd_canon->parsed()) {
      std::cout << cgt::print_form(cgt::canonicalize(cgt::parse_game(expr_text)), true) << "\n";
    } else if (cmd_cmp->parsed()) {
      auto rel = cgt::relation(cgt::parse_game(expr_text), cgt::parse_game(expr_text2));
      std::cout << cgt::to_string(rel) << "\n";
    } else if (cmd_classify->parsed()) {
      std::cout << classification_json(cgt::parse_game(expr_text)).dump() << "\n";
    } else if (cmd_fitting->parsed()) {
      cgt::Game g = cgt::parse_game(expr_text);
      if (probe_opt->count() > 0) {
        auto x = cgt::Dyadic::parse(probe_text);
        if (!x) {
          std::cerr << "invalid dyadic: " << probe_text << "\n";
          return 1;
        }
        std::cout << (cgt::fitting_contains(g, *x) ? "true" : "false") << "\n";
      } else if (auto simplest = cgt::simplest_fitting(g)) {
        std::cout << simplest->str() << "\n";
      } else {
        std::cout << "empty\n";
      }
    } else if (cmd_hack->parsed() || cmd_topp->parsed()) {
      cgt::Game g = cmd_hack->parsed()
                        ? cgt::hackenbush_to_form(cgt::parse_hackenbush(ruleset_text))
                        : cgt::toppling_to_form(cgt::parse_toppling(ruleset_text));
      std::cout << eval_string(g) << "\n";
      std::cout << cgt::print_form(g, false) << "\n";
    } else if (scan_wz->parsed()) {
      auto findings = cgt::scan_weak_zugzwangs(day, max_options);
      for (cgt::Game g : findings) {
        ordered_json line;
        line["candidate"] = cgt::print_form(g, false);
        std::cout << line.dump() << "\n";
      }
      ordered_json summary;
      summary["scanned"] = cgt::enumerate_forms(day, max_options).size();
      summary["findings"] = findings.size();
      std::cout << summary.dump() << "\n";
    } else if (scan_gap->parsed()) {
      auto findings = cgt::scan_infinitesimal_right_gap(day, max_options);
      for (const auto& [g, r] : findings) {
        ordered_json line;
        line["candidate"] = cgt::print_form(g, false);
        line["right_option"] = cgt::print_form(r, false);
        std::cout << line.dump() << "\n";
      }
      ordered_json summary;
      summary["scanned"] = cgt::enumerate_forms(day, max_options).size();
      summary["findings"] = findings.size();
      std::cout << summary.dump() << "\n";
    } else if (cmd_enum->parsed()) {
      auto forms = cgt::enumerate_forms(day, max_options);
      std::unordered_set<std::uint32_t> values;
      for (cgt::Game g : forms) values.insert(cgt::canonicalize(g).id);
      ordered_json j;
      j["day"] = day;
      j["max_options"] = max_options;
      j["forms"] = forms.size();
      j["distinct_values"] = values.size();
      std::cout << j.dump() << "\n";
    }
  } catch (const cgt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.find("budget") != std::string::npos ? 2 : 1;
  }
  return 0;
}
