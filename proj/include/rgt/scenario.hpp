#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rgt/agents.hpp"
#include "rgt/decision.hpp"
#include "rgt/group.hpp"
#include "rgt/influence.hpp"

namespace rgt {

enum class SubjectKind { Human, Robot };

struct SubjectDecl {
  std::string id;
  SubjectKind kind = SubjectKind::Human;
};

struct FoldTask {};
struct SuperActiveTask {};
struct SuggestChangeTask {
  std::string actor;
};
struct ForwardTask {
  std::string subject;
};
struct ForwardSweepTask {
  std::string subject;
};
struct InverseTask {
  std::string subject;
  std::string upper;  // alternative text; parsed against the universe
  std::string lower;
  std::map<std::string, std::string> fixed;
  std::optional<SolveMode> mode;  // default: Equation for single targets,
                                  // System for intervals
};
struct FeasibleTargetsTask {
  std::string subject;
  std::map<std::string, std::string> fixed;
  SolveMode mode = SolveMode::System;
};
struct FrustrationTask {
  std::string subject;
  std::map<std::string, std::string> fixed;
};
struct AgentStepTask {
  std::string robot;
  std::optional<std::string> control_subject;
  SolveMode control_mode = SolveMode::System;
};

using Task =
    std::variant<FoldTask, SuperActiveTask, SuggestChangeTask, ForwardTask,
                 ForwardSweepTask, InverseTask, FeasibleTargetsTask,
                 FrustrationTask, AgentStepTask>;

/// A fully validated scenario: universe, group, influences, and the task
/// list, as read from a scenario JSON file.
struct Scenario {
  std::string name;
  UniversePtr universe;
  AsimovPolicy policy;
  std::vector<SubjectDecl> subjects;
  std::optional<Polynomial> polynomial;  // always set after parsing
  std::vector<std::string> excluded;
  InfluenceMatrix influences;
  std::vector<Task> tasks;

  SubjectKind kind_of(const std::string& id) const;
};

Scenario load_scenario(const std::filesystem::path& path);
Scenario parse_scenario(const nlohmann::json& doc, const std::string& name);

enum class ReportFormat { Table, Json };

/// Executes every task in order. The JSON report is the canonical result
/// structure (keys sorted, values in canonical order); the table format is
/// rendered from it.
nlohmann::json run_scenario(const Scenario& scenario);
std::string render_report(const nlohmann::json& report, ReportFormat format);

}  // namespace rgt
