#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgt/scenario.hpp"
#include "rgt/version.hpp"

namespace {

using namespace rgt;

UniversePtr universe_from_flag(const std::string& actions_flag) {
  std::vector<Action> actions;
  std::size_t start = 0;
  while (start <= actions_flag.size()) {
    std::size_t comma = actions_flag.find(',', start);
    std::string name = actions_flag.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (name.empty())
      throw ValidationError("--actions: empty action name");
    actions.push_back({name, false});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return make_universe(std::move(actions));
}

/// Splits "b={alpha,beta},c=0" into var=alt pairs; commas inside braces
/// belong to the alternative.
std::vector<std::pair<std::string, std::string>> split_assignments(
    const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);

  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& part : parts) {
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= part.size())
      throw ValidationError("expected var=alternative, got '" + part + "'");
    out.emplace_back(part.substr(0, eq), part.substr(eq + 1));
  }
  return out;
}

std::map<std::string, Alternative> parse_assignments(
    const std::vector<std::string>& flags, const UniversePtr& universe) {
  std::map<std::string, Alternative> out;
  for (const auto& flag : flags)
    for (const auto& [var, text] : split_assignments(flag))
      out.insert_or_assign(var, parse_alternative(text, universe));
  return out;
}

std::string tuple_of(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out + ")";
}

std::string strategy_tuple(const Strategy& strategy) {
  std::string out = "(";
  bool first = true;
  for (const auto& [var, value] : strategy) {
    (void)var;
    if (!first) out += ", ";
    out += to_string(value);
    first = false;
  }
  return out + ")";
}

std::string choice_set(const std::vector<Alternative>& alts) {
  std::string out = "{";
  for (std::size_t i = 0; i < alts.size(); ++i) {
    if (i) out += ", ";
    out += to_string(alts[i]);
  }
  return out + "}";
}

std::vector<std::string> free_vars_of(const CanonicalEquation& eq,
                                      const std::map<std::string, Alternative>& fixed) {
  std::vector<std::string> out;
  for (const auto& v : effective_variables(eq.a, eq.b))
    if (!fixed.count(v)) out.push_back(v);
  return out;
}

int cmd_run(const std::string& path, std::string format_flag) {
  if (format_flag.empty()) {
    if (const char* env = std::getenv("RGT_FORMAT")) format_flag = env;
  }
  if (format_flag.empty()) format_flag = "table";
  ReportFormat format;
  if (format_flag == "table")
    format = ReportFormat::Table;
  else if (format_flag == "json")
    format = ReportFormat::Json;
  else
    throw ValidationError("output format must be \"table\" or \"json\"");

  const Scenario scenario = load_scenario(path);
  std::cout << render_report(run_scenario(scenario), format);
  return 0;
}

int cmd_fold(const std::string& poly_text) {
  const FoldResult result = fold(parse_polynomial(poly_text));
  std::cout << to_string(result.symbolic) << "\n";
  if (is_super_active(result.function)) std::cout << "super-active\n";
  return 0;
}

int cmd_forward(const std::string& poly_text, const std::string& subject,
                const std::vector<std::string>& inf_flags,
                const UniversePtr& universe) {
  const CanonicalEquation eq =
      canonicalize(fold(parse_polynomial(poly_text)).function, subject);
  const auto influences = parse_assignments(inf_flags, universe);
  for (const auto& v : effective_variables(eq.a, eq.b))
    if (!influences.count(v))
      throw ValidationError("missing --inf for variable '" + v + "'");
  const DecisionOutcome outcome = forward_solve(eq, influences, universe);
  std::cout << "A = " << to_string(outcome.a_value)
            << ", B = " << to_string(outcome.b_value) << "\n";
  if (outcome.frustrated())
    std::cout << "frustration\n";
  else
    std::cout << "D = " << choice_set(outcome.choices) << "\n";
  return 0;
}

int cmd_inverse(const std::string& poly_text, const std::string& subject,
                const std::string& upper_text, const std::string& lower_text,
                const std::vector<std::string>& fix_flags,
                const std::string& mode_flag, const UniversePtr& universe) {
  const CanonicalEquation eq =
      canonicalize(fold(parse_polynomial(poly_text)).function, subject);
  const Alternative upper = parse_alternative(upper_text, universe);
  const Alternative lower = parse_alternative(lower_text, universe);
  const auto fixed = parse_assignments(fix_flags, universe);

  SolveMode mode;
  if (mode_flag.empty())
    mode = upper == lower ? SolveMode::Equation : SolveMode::System;
  else if (mode_flag == "system")
    mode = SolveMode::System;
  else if (mode_flag == "equation")
    mode = SolveMode::Equation;
  else
    throw ValidationError("--mode must be \"system\" or \"equation\"");
  if (mode == SolveMode::Equation && upper != lower)
    throw ValidationError("equation mode requires a single-alternative target");

  const std::vector<Strategy> strategies =
      mode == SolveMode::System
          ? solve_system({eq.a, eq.b, TargetChoice(upper, lower), fixed, universe})
          : solve_equation(eq.a, eq.b, upper, fixed, universe);

  std::cout << "free variables: " << tuple_of(free_vars_of(eq, fixed)) << "\n";
  std::cout << strategies.size() << (strategies.size() == 1 ? " strategy:" : " strategies:")
            << "\n";
  for (const auto& s : strategies) std::cout << strategy_tuple(s) << "\n";
  return 0;
}

int cmd_feasible(const std::string& poly_text, const std::string& subject,
                 const std::vector<std::string>& fix_flags,
                 const std::string& mode_flag, const UniversePtr& universe) {
  const CanonicalEquation eq =
      canonicalize(fold(parse_polynomial(poly_text)).function, subject);
  const auto fixed = parse_assignments(fix_flags, universe);
  SolveMode mode = SolveMode::System;
  if (mode_flag == "equation")
    mode = SolveMode::Equation;
  else if (!mode_flag.empty() && mode_flag != "system")
    throw ValidationError("--mode must be \"system\" or \"equation\"");

  const FeasibleTargets result =
      feasible_targets(eq.a, eq.b, fixed, universe, mode);
  std::cout << "free variables: " << tuple_of(free_vars_of(eq, fixed)) << "\n";
  std::string dh;
  for (const auto& t : result.targets) {
    if (!dh.empty()) dh += ", ";
    dh += to_string(t);
  }
  std::cout << "D_h = {" << dh << "}\n";
  for (std::size_t i = 0; i < result.targets.size(); ++i) {
    std::cout << "target " << to_string(result.targets[i]) << ": "
              << result.strategies[i].size()
              << (result.strategies[i].size() == 1 ? " strategy" : " strategies")
              << "\n";
    for (const auto& s : result.strategies[i])
      std::cout << "  " << strategy_tuple(s) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflexive Game Theory engine"};
  app.set_version_flag("--version", rgt::kEngineVersion);
  app.require_subcommand(1);

  std::string scenario_path, format_flag;
  CLI::App* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--format", format_flag, "Output format: table or json");

  std::string poly_text, subject, upper_text, lower_text, mode_flag;
  std::string actions_flag = "alpha,beta";
  std::vector<std::string> inf_flags, fix_flags;

  CLI::App* fold_cmd = app.add_subcommand("fold", "Fold a polynomial");
  fold_cmd->add_option("polynomial", poly_text, "Polynomial text")->required();

  CLI::App* forward = app.add_subcommand("forward", "Solve the Forward task");
  forward->add_option("--poly", poly_text, "Polynomial text")->required();
  forward->add_option("--subject", subject, "Subject of interest")->required();
  forward->add_option("--inf", inf_flags, "Influences, var=alternative");
  forward->add_option("--actions", actions_flag, "Universe actions");

  CLI::App* inverse = app.add_subcommand("inverse", "Solve the Inverse task");
  inverse->add_option("--poly", poly_text, "Polynomial text")->required();
  inverse->add_option("--subject", subject, "Controlled subject")->required();
  inverse->add_option("--upper", upper_text, "Target upper bound")->required();
  inverse->add_option("--lower", lower_text, "Target lower bound")->required();
  inverse->add_option("--fix", fix_flags, "Fixed influences, var=alternative");
  inverse->add_option("--mode", mode_flag, "system or equation");
  inverse->add_option("--actions", actions_flag, "Universe actions");

  CLI::App* feasible =
      app.add_subcommand("feasible", "Extract D_h and Z_h for a subject");
  feasible->add_option("--poly", poly_text, "Polynomial text")->required();
  feasible->add_option("--subject", subject, "Controlled subject")->required();
  feasible->add_option("--fix", fix_flags, "Fixed influences");
  feasible->add_option("--mode", mode_flag, "system or equation");
  feasible->add_option("--actions", actions_flag, "Universe actions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(scenario_path, format_flag);
    const rgt::UniversePtr universe = universe_from_flag(actions_flag);
    if (fold_cmd->parsed()) return cmd_fold(poly_text);
    if (forward->parsed())
      return cmd_forward(poly_text, subject, inf_flags, universe);
    if (inverse->parsed())
      return cmd_inverse(poly_text, subject, upper_text, lower_text, fix_flags,
                         mode_flag, universe);
    if (feasible->parsed())
      return cmd_feasible(poly_text, subject, fix_flags, mode_flag, universe);
  } catch (const rgt::NotDecomposableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const rgt::PolicyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const rgt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rgt::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rgt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
