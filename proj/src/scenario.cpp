#include "rgt/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rgt/version.hpp"

namespace rgt {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path + ": " + message);
}

const json& field(const json& obj, const std::string& key,
                  const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

std::string get_string(const json& obj, const std::string& key,
                       const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

bool get_bool_or(const json& obj, const std::string& key, bool fallback,
                 const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

void reject_unknown_keys(const json& obj,
                         std::initializer_list<const char*> known,
                         const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find_if(known.begin(), known.end(), [&](const char* k) {
          return key == k;
        }) == known.end())
      fail(path, "unknown field '" + key + "'");
  }
}

SolveMode parse_mode(const std::string& text, const std::string& path) {
  if (text == "system") return SolveMode::System;
  if (text == "equation") return SolveMode::Equation;
  fail(path, "mode must be \"system\" or \"equation\"");
}

std::map<std::string, std::string> parse_fixed(const json& task,
                                               const std::string& path) {
  std::map<std::string, std::string> fixed;
  if (!task.contains("fixed")) return fixed;
  const json& obj = task.at("fixed");
  if (!obj.is_object()) fail(path + ".fixed", "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_string())
      fail(path + ".fixed." + key, "expected an alternative string");
    fixed[key] = value.get<std::string>();
  }
  return fixed;
}

}  // namespace

SubjectKind Scenario::kind_of(const std::string& id) const {
  for (const auto& s : subjects)
    if (s.id == id) return s.kind;
  throw ValidationError("unknown subject '" + id + "'");
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open scenario file: " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError("scenario JSON: " + std::string(e.what()));
  }
  return parse_scenario(doc, path.stem().string());
}

Scenario parse_scenario(const json& doc, const std::string& default_name) {
  if (!doc.is_object()) fail("scenario", "expected a JSON object");
  reject_unknown_keys(doc,
                      {"name", "actions", "inaction_forbidden", "subjects",
                       "relations", "polynomial", "importance", "influences",
                       "tasks"},
                      "scenario");

  Scenario s;
  s.name = doc.contains("name") ? get_string(doc, "name", "scenario")
                                : default_name;

  // Universe and Asimov policy.
  const json& actions = field(doc, "actions", "scenario");
  if (!actions.is_array() || actions.empty())
    fail("scenario.actions", "expected a non-empty array");
  std::vector<Action> action_list;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const std::string path = "scenario.actions[" + std::to_string(i) + "]";
    const json& a = actions[i];
    if (!a.is_object()) fail(path, "expected an object {name, risky?}");
    reject_unknown_keys(a, {"name", "risky"}, path);
    Action act{get_string(a, "name", path), get_bool_or(a, "risky", false, path)};
    if (act.risky) s.policy.risky.insert(act.name);
    action_list.push_back(std::move(act));
  }
  s.universe = make_universe(std::move(action_list));
  s.policy.inaction_forbidden =
      get_bool_or(doc, "inaction_forbidden", false, "scenario");

  // Subjects.
  const json& subjects = field(doc, "subjects", "scenario");
  if (!subjects.is_array() || subjects.empty())
    fail("scenario.subjects", "expected a non-empty array");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    const std::string path = "scenario.subjects[" + std::to_string(i) + "]";
    const json& sub = subjects[i];
    if (!sub.is_object()) fail(path, "expected an object {id, kind?}");
    reject_unknown_keys(sub, {"id", "kind"}, path);
    SubjectDecl decl;
    decl.id = get_string(sub, "id", path);
    Polynomial::variable(decl.id);  // validates the identifier
    if (sub.contains("kind")) {
      const std::string kind = get_string(sub, "kind", path);
      if (kind == "human")
        decl.kind = SubjectKind::Human;
      else if (kind == "robot")
        decl.kind = SubjectKind::Robot;
      else
        fail(path + ".kind", "must be \"human\" or \"robot\"");
    }
    if (std::find(ids.begin(), ids.end(), decl.id) != ids.end())
      fail(path, "duplicate subject id '" + decl.id + "'");
    ids.push_back(decl.id);
    s.subjects.push_back(std::move(decl));
  }
  if (ids.size() > RelationshipGraph::kMaxSubjects)
    fail("scenario.subjects", "at most 8 subjects are supported");

  // Importance ranking.
  std::vector<std::string> importance;
  if (doc.contains("importance")) {
    const json& imp = doc.at("importance");
    if (!imp.is_array()) fail("scenario.importance", "expected an array");
    for (const auto& v : imp) {
      if (!v.is_string()) fail("scenario.importance", "expected subject ids");
      importance.push_back(v.get<std::string>());
    }
    std::vector<std::string> check = importance;
    std::sort(check.begin(), check.end());
    std::vector<std::string> sorted_ids = ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    if (check != sorted_ids)
      fail("scenario.importance",
           "must be a permutation of the subject ids (least important last)");
  }

  // Group structure: explicit relations, polynomial text, or both.
  std::optional<RelationshipGraph> graph;
  if (doc.contains("relations")) {
    const json& rels = doc.at("relations");
    if (!rels.is_array()) fail("scenario.relations", "expected an array");
    std::map<RelationshipGraph::Edge, Relation> edges;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const std::string path = "scenario.relations[" + std::to_string(i) + "]";
      const json& r = rels[i];
      if (!r.is_object()) fail(path, "expected an object {pair, kind}");
      reject_unknown_keys(r, {"pair", "kind"}, path);
      const json& pair = field(r, "pair", path);
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string())
        fail(path + ".pair", "expected [subject, subject]");
      std::string a = pair[0].get<std::string>();
      std::string b = pair[1].get<std::string>();
      if (a == b) fail(path + ".pair", "subjects must differ");
      if (b < a) std::swap(a, b);
      const std::string kind = get_string(r, "kind", path);
      Relation rel;
      if (kind == "alliance")
        rel = Relation::Alliance;
      else if (kind == "conflict")
        rel = Relation::Conflict;
      else
        fail(path + ".kind", "must be \"alliance\" or \"conflict\"");
      if (edges.count({a, b}))
        fail(path, "duplicate relation for pair (" + a + ", " + b + ")");
      edges[{a, b}] = rel;
    }
    try {
      graph.emplace(ids, std::move(edges));
    } catch (const ValidationError& e) {
      fail("scenario.relations", e.what());
    }
  }

  std::optional<Polynomial> poly_text;
  if (doc.contains("polynomial")) {
    try {
      poly_text = parse_polynomial(get_string(doc, "polynomial", "scenario"),
                                   ids);
    } catch (const ParseError& e) {
      fail("scenario.polynomial", e.what());
    }
    std::vector<std::string> poly_vars = poly_text->variables();
    std::vector<std::string> sorted_ids = ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    if (poly_vars != sorted_ids)
      fail("scenario.polynomial",
           "polynomial variables must match the declared subjects");
  }

  if (graph && poly_text) {
    if (!(graph_of(*poly_text) == *graph))
      fail("scenario", "relations and polynomial describe different groups");
    s.polynomial = *poly_text;
  } else if (poly_text) {
    s.polynomial = *poly_text;
  } else if (graph) {
    ExclusionResult result = exclude_until_decomposable(*graph, importance);
    s.polynomial = std::move(result.polynomial);
    s.excluded = std::move(result.excluded);
    std::sort(s.excluded.begin(), s.excluded.end());
  } else {
    fail("scenario", "either 'relations' or 'polynomial' is required");
  }

  const auto is_active_subject = [&](const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end() &&
           std::find(s.excluded.begin(), s.excluded.end(), id) ==
               s.excluded.end();
  };

  // Influence matrix (partial is fine).
  if (doc.contains("influences")) {
    const json& inf = doc.at("influences");
    if (!inf.is_object()) fail("scenario.influences", "expected an object");
    for (const auto& [influencer, row] : inf.items()) {
      if (std::find(ids.begin(), ids.end(), influencer) == ids.end())
        fail("scenario.influences", "unknown subject '" + influencer + "'");
      if (!row.is_object())
        fail("scenario.influences." + influencer, "expected an object");
      for (const auto& [target, value] : row.items()) {
        const std::string path =
            "scenario.influences." + influencer + "." + target;
        if (std::find(ids.begin(), ids.end(), target) == ids.end())
          fail(path, "unknown subject '" + target + "'");
        if (!value.is_string()) fail(path, "expected an alternative string");
        try {
          s.influences.set(influencer, target,
                           parse_alternative(value.get<std::string>(),
                                             s.universe));
        } catch (const Error& e) {
          fail(path, e.what());
        }
      }
    }
  }

  // Tasks.
  if (doc.contains("tasks")) {
    const json& tasks = doc.at("tasks");
    if (!tasks.is_array()) fail("scenario.tasks", "expected an array");
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const std::string path = "scenario.tasks[" + std::to_string(i) + "]";
      const json& t = tasks[i];
      if (!t.is_object()) fail(path, "expected an object");
      const std::string type = get_string(t, "type", path);

      const auto need_subject = [&](const char* key) {
        const std::string id = get_string(t, key, path);
        if (!is_active_subject(id))
          fail(path, std::string("'") + key + "' must name an active subject");
        return id;
      };
      const auto validate_alt = [&](const std::string& text) {
        try {
          parse_alternative(text, s.universe);
        } catch (const Error& e) {
          fail(path, e.what());
        }
        return text;
      };
      const auto validate_fixed = [&](std::map<std::string, std::string> f) {
        for (const auto& [var, text] : f) {
          if (!is_active_subject(var))
            fail(path + ".fixed", "unknown subject '" + var + "'");
          validate_alt(text);
        }
        return f;
      };

      if (type == "fold") {
        reject_unknown_keys(t, {"type"}, path);
        s.tasks.emplace_back(FoldTask{});
      } else if (type == "super-active-check") {
        reject_unknown_keys(t, {"type"}, path);
        s.tasks.emplace_back(SuperActiveTask{});
      } else if (type == "suggest-relation-change") {
        reject_unknown_keys(t, {"type", "actor"}, path);
        s.tasks.emplace_back(SuggestChangeTask{need_subject("actor")});
      } else if (type == "forward") {
        reject_unknown_keys(t, {"type", "subject"}, path);
        s.tasks.emplace_back(ForwardTask{need_subject("subject")});
      } else if (type == "forward-sweep") {
        reject_unknown_keys(t, {"type", "subject"}, path);
        s.tasks.emplace_back(ForwardSweepTask{need_subject("subject")});
      } else if (type == "inverse") {
        reject_unknown_keys(
            t, {"type", "subject", "target", "upper", "lower", "fixed", "mode"},
            path);
        InverseTask task;
        task.subject = need_subject("subject");
        if (t.contains("target")) {
          if (t.contains("upper") || t.contains("lower"))
            fail(path, "give either 'target' or 'upper'+'lower', not both");
          task.upper = task.lower = validate_alt(get_string(t, "target", path));
        } else {
          task.upper = validate_alt(get_string(t, "upper", path));
          task.lower = validate_alt(get_string(t, "lower", path));
        }
        task.fixed = validate_fixed(parse_fixed(t, path));
        if (t.contains("mode"))
          task.mode = parse_mode(get_string(t, "mode", path), path + ".mode");
        s.tasks.emplace_back(std::move(task));
      } else if (type == "feasible-targets") {
        reject_unknown_keys(t, {"type", "subject", "fixed", "mode"}, path);
        FeasibleTargetsTask task;
        task.subject = need_subject("subject");
        task.fixed = validate_fixed(parse_fixed(t, path));
        if (t.contains("mode"))
          task.mode = parse_mode(get_string(t, "mode", path), path + ".mode");
        s.tasks.emplace_back(std::move(task));
      } else if (type == "frustration") {
        reject_unknown_keys(t, {"type", "subject", "fixed"}, path);
        FrustrationTask task;
        task.subject = need_subject("subject");
        task.fixed = validate_fixed(parse_fixed(t, path));
        s.tasks.emplace_back(std::move(task));
      } else if (type == "agent-step") {
        reject_unknown_keys(t, {"type", "robot", "control"}, path);
        AgentStepTask task;
        task.robot = need_subject("robot");
        if (s.kind_of(task.robot) != SubjectKind::Robot)
          fail(path, "'" + task.robot + "' is not a robot");
        if (t.contains("control")) {
          const json& c = t.at("control");
          if (!c.is_object()) fail(path + ".control", "expected an object");
          reject_unknown_keys(c, {"subject", "mode"}, path + ".control");
          const std::string subject = get_string(c, "subject", path + ".control");
          if (!is_active_subject(subject))
            fail(path + ".control", "unknown subject '" + subject + "'");
          task.control_subject = subject;
          if (c.contains("mode"))
            task.control_mode = parse_mode(
                get_string(c, "mode", path + ".control"), path + ".control.mode");
        }
        s.tasks.emplace_back(std::move(task));
      } else {
        fail(path, "unknown task type '" + type + "'");
      }
    }
  }

  return s;
}

// ---------------------------------------------------------------------------
// Execution

namespace {

json alternatives_json(const std::vector<Alternative>& alts) {
  json out = json::array();
  for (const auto& a : alts) out.push_back(to_string(a));
  return out;
}

json strategy_json(const Strategy& strategy) {
  json out = json::array();
  for (const auto& [var, value] : strategy) {
    (void)var;
    out.push_back(to_string(value));
  }
  return out;
}

json strategies_json(const std::vector<Strategy>& strategies) {
  json out = json::array();
  for (const auto& s : strategies) out.push_back(strategy_json(s));
  return out;
}

/// Runs a scenario's tasks against the shared fold of its polynomial.
class Runner {
 public:
  explicit Runner(const Scenario& s)
      : s_(s), fold_(fold(*s.polynomial)) {}

  json run() {
    json report;
    report["engine"] = kEngineVersion;
    report["scenario"] = s_.name;
    json universe = json::array();
    for (const auto& a : s_.universe->actions())
      universe.push_back({{"name", a.name}, {"risky", a.risky}});
    report["universe"] = {{"actions", universe},
                          {"inaction_forbidden", s_.policy.inaction_forbidden}};
    json subjects = json::array();
    for (const auto& sub : s_.subjects)
      subjects.push_back(
          {{"id", sub.id},
           {"kind", sub.kind == SubjectKind::Robot ? "robot" : "human"}});
    report["subjects"] = subjects;
    report["polynomial"] = to_string(*s_.polynomial);
    report["excluded"] = s_.excluded;

    json tasks = json::array();
    for (const auto& task : s_.tasks)
      tasks.push_back(std::visit(
          overloaded{
              [&](const FoldTask& t) { return run_fold(t); },
              [&](const SuperActiveTask& t) { return run_super_active(t); },
              [&](const SuggestChangeTask& t) { return run_suggest(t); },
              [&](const ForwardTask& t) { return run_forward(t); },
              [&](const ForwardSweepTask& t) { return run_sweep(t); },
              [&](const InverseTask& t) { return run_inverse(t); },
              [&](const FeasibleTargetsTask& t) { return run_feasible(t); },
              [&](const FrustrationTask& t) { return run_frustration(t); },
              [&](const AgentStepTask& t) { return run_agent_step(t); },
          },
          task));
    report["tasks"] = tasks;
    return report;
  }

 private:
  CanonicalEquation equation_for(const std::string& subject) const {
    return canonicalize(fold_.function, subject);
  }

  std::map<std::string, Alternative> parse_fixed_values(
      const std::map<std::string, std::string>& fixed) const {
    std::map<std::string, Alternative> out;
    for (const auto& [var, text] : fixed)
      out.insert({var, parse_alternative(text, s_.universe)});
    return out;
  }

  std::vector<std::string> free_variables(
      const CanonicalEquation& eq,
      const std::map<std::string, Alternative>& fixed) const {
    std::vector<std::string> out;
    for (const auto& v : effective_variables(eq.a, eq.b))
      if (!fixed.count(v)) out.push_back(v);
    return out;
  }

  json run_fold(const FoldTask&) const {
    json out;
    out["type"] = "fold";
    out["folded"] = to_string(fold_.symbolic);
    out["simplified"] = sop_string(fold_.function);
    out["depends_on"] = fold_.function.variables();
    out["super_active"] = is_super_active(fold_.function);
    return out;
  }

  json run_super_active(const SuperActiveTask&) const {
    json out;
    out["type"] = "super-active-check";
    out["super_active"] = is_super_active(fold_.function);
    return out;
  }

  json run_suggest(const SuggestChangeTask& t) const {
    json out;
    out["type"] = "suggest-relation-change";
    out["actor"] = t.actor;
    json suggestions = json::array();
    for (const auto& change :
         suggest_relation_change(graph_of(*s_.polynomial), t.actor))
      suggestions.push_back(
          {{"edge", {change.edge.first, change.edge.second}},
           {"new_relation", to_string(change.new_relation)},
           {"polynomial", to_string(change.polynomial)}});
    out["suggestions"] = suggestions;
    return out;
  }

  DecisionOutcome forward_for(const std::string& subject) const {
    const CanonicalEquation eq = equation_for(subject);
    const auto column = s_.influences.column(subject);
    for (const auto& v : effective_variables(eq.a, eq.b))
      if (!column.count(v))
        throw ValidationError("forward task for '" + subject +
                              "': missing influence from '" + v + "'");
    return forward_solve(eq, column, s_.universe);
  }

  json outcome_json(const DecisionOutcome& outcome) const {
    json out;
    out["a_value"] = to_string(outcome.a_value);
    out["b_value"] = to_string(outcome.b_value);
    out["frustrated"] = outcome.frustrated();
    out["choices"] = alternatives_json(outcome.choices);
    return out;
  }

  json run_forward(const ForwardTask& t) const {
    json out = outcome_json(forward_for(t.subject));
    out["type"] = "forward";
    out["subject"] = t.subject;
    return out;
  }

  json run_sweep(const ForwardSweepTask& t) const {
    const CanonicalEquation eq = equation_for(t.subject);
    const bool robot = s_.kind_of(t.subject) == SubjectKind::Robot;
    std::vector<Alternative> u;
    if (robot) u = compute_U(s_.universe, s_.policy);

    json out;
    out["type"] = "forward-sweep";
    out["subject"] = t.subject;
    out["variables"] = free_variables(eq, {});
    json rows = json::array();
    for_each_joint_influence(
        eq.a, eq.b, {}, s_.universe,
        [&](const Strategy& assignment, const Alternative& a_value,
            const Alternative& b_value) {
          DecisionOutcome outcome{a_value, b_value,
                                  interval_members(a_value, b_value)};
          json row;
          row["influences"] = strategy_json(assignment);
          row["frustrated"] = outcome.frustrated();
          row["choices"] = alternatives_json(outcome.choices);
          if (robot) {
            const RobotDecision decision = interaction1(outcome, u);
            row["robot_choice"] = to_string(decision.chosen);
            row["robot_source"] =
                decision.source == RobotDecision::Source::FromDU ? "DU" : "U";
          }
          rows.push_back(std::move(row));
        });
    out["rows"] = rows;
    return out;
  }

  json run_inverse(const InverseTask& t) const {
    const CanonicalEquation eq = equation_for(t.subject);
    const Alternative upper = parse_alternative(t.upper, s_.universe);
    const Alternative lower = parse_alternative(t.lower, s_.universe);
    const auto fixed = parse_fixed_values(t.fixed);
    const SolveMode mode = t.mode ? *t.mode
                                  : (upper == lower ? SolveMode::Equation
                                                    : SolveMode::System);
    if (mode == SolveMode::Equation && upper != lower)
      throw ValidationError(
          "equation mode requires a single-alternative target");

    std::vector<Strategy> strategies =
        mode == SolveMode::System
            ? solve_system(
                  {eq.a, eq.b, TargetChoice(upper, lower), fixed, s_.universe})
            : solve_equation(eq.a, eq.b, upper, fixed, s_.universe);

    json out;
    out["type"] = "inverse";
    out["subject"] = t.subject;
    out["upper"] = to_string(upper);
    out["lower"] = to_string(lower);
    out["mode"] = mode == SolveMode::System ? "system" : "equation";
    json fixed_json = json::object();
    for (const auto& [var, value] : fixed) fixed_json[var] = to_string(value);
    out["fixed"] = fixed_json;
    out["variables"] = free_variables(eq, fixed);
    out["strategies"] = strategies_json(strategies);
    return out;
  }

  json run_feasible(const FeasibleTargetsTask& t) const {
    const CanonicalEquation eq = equation_for(t.subject);
    const auto fixed = parse_fixed_values(t.fixed);
    const FeasibleTargets result =
        feasible_targets(eq.a, eq.b, fixed, s_.universe, t.mode);

    json out;
    out["type"] = "feasible-targets";
    out["subject"] = t.subject;
    out["mode"] = t.mode == SolveMode::System ? "system" : "equation";
    out["variables"] = free_variables(eq, fixed);
    json targets = json::array();
    for (std::size_t i = 0; i < result.targets.size(); ++i)
      targets.push_back({{"alternative", to_string(result.targets[i])},
                         {"strategies", strategies_json(result.strategies[i])}});
    out["targets"] = targets;
    return out;
  }

  json run_frustration(const FrustrationTask& t) const {
    const CanonicalEquation eq = equation_for(t.subject);
    const auto fixed = parse_fixed_values(t.fixed);
    json out;
    out["type"] = "frustration";
    out["subject"] = t.subject;
    out["variables"] = free_variables(eq, fixed);
    out["assignments"] = strategies_json(
        frustration_strategies(eq.a, eq.b, fixed, s_.universe));
    return out;
  }

  json run_agent_step(const AgentStepTask& t) const {
    const std::vector<Alternative> u = compute_U(s_.universe, s_.policy);
    json out;
    out["type"] = "agent-step";
    out["robot"] = t.robot;
    out["approved"] = alternatives_json(u);

    // Module 1 + Interaction Module 1: the robot's own decision, when the
    // scenario supplies the influences it needs.
    const CanonicalEquation eq = equation_for(t.robot);
    const auto column = s_.influences.column(t.robot);
    std::vector<std::string> missing;
    for (const auto& v : effective_variables(eq.a, eq.b))
      if (!column.count(v)) missing.push_back(v);
    if (missing.empty()) {
      const DecisionOutcome outcome = forward_solve(eq, column, s_.universe);
      const RobotDecision decision = interaction1(outcome, u);
      json d = outcome_json(outcome);
      d["chosen"] = to_string(decision.chosen);
      d["source"] = decision.source == RobotDecision::Source::FromDU ? "DU" : "U";
      out["decision"] = d;
    } else {
      out["decision"] = nullptr;
      std::string note = "missing influences on '" + t.robot + "':";
      for (const auto& v : missing) note += " " + v;
      out["decision_note"] = note;
    }

    // Module 3 + Interaction Module 2: steer the controlled subject.
    if (t.control_subject) {
      const CanonicalEquation ceq = equation_for(*t.control_subject);
      const FeasibleTargets feasible =
          feasible_targets(ceq.a, ceq.b, {}, s_.universe, t.control_mode);
      const ControlPlan plan = interaction2(ceq.a, ceq.b, {}, feasible, u,
                                            *t.control_subject, s_.universe);
      json c;
      c["subject"] = *t.control_subject;
      c["mode"] = t.control_mode == SolveMode::System ? "system" : "equation";
      c["variables"] = free_variables(ceq, {});
      json p;
      switch (plan.kind) {
        case ControlPlan::Kind::SteerApproved:
          p["kind"] = "steer-approved";
          break;
        case ControlPlan::Kind::SteerFromZU:
          p["kind"] = "steer-from-zu";
          break;
        case ControlPlan::Kind::Frustrate:
          p["kind"] = "frustrate";
          break;
        case ControlPlan::Kind::Uncontrollable:
          p["kind"] = "uncontrollable";
          break;
      }
      if (plan.target) p["target"] = to_string(*plan.target);
      if (plan.strategy) p["strategy"] = strategy_json(*plan.strategy);
      if (!plan.frustration.empty())
        p["frustration"] = strategies_json(plan.frustration);
      c["plan"] = p;
      out["control"] = c;
    }
    return out;
  }

  const Scenario& s_;
  FoldResult fold_;
};

}  // namespace

json run_scenario(const Scenario& scenario) { return Runner(scenario).run(); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string tuple_line(const json& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get<std::string>();
  }
  out += ")";
  return out;
}

std::string choice_set(const json& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get<std::string>();
  }
  out += "}";
  return out;
}

std::string name_list(const json& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get<std::string>();
  }
  return out;
}

std::string counted(std::size_t n, const char* singular, const char* plural) {
  return std::to_string(n) + " " + (n == 1 ? singular : plural);
}

void render_strategies(std::ostringstream& os, const json& strategies,
                       const std::string& indent) {
  for (const auto& s : strategies) os << indent << tuple_line(s) << "\n";
}

void render_task(std::ostringstream& os, const json& t, std::size_t index) {
  const std::string type = t.at("type").get<std::string>();
  os << "task " << index << ": " << type;

  if (type == "fold") {
    os << "\n";
    os << "  folded: " << t.at("folded").get<std::string>() << "\n";
    os << "  simplified: " << t.at("simplified").get<std::string>() << "\n";
    os << "  depends on: "
       << (t.at("depends_on").empty() ? "(none)" : name_list(t.at("depends_on")))
       << "\n";
    os << "  super-active: " << (t.at("super_active").get<bool>() ? "yes" : "no")
       << "\n";
  } else if (type == "super-active-check") {
    os << "\n  super-active: "
       << (t.at("super_active").get<bool>() ? "yes" : "no") << "\n";
  } else if (type == "suggest-relation-change") {
    os << " actor=" << t.at("actor").get<std::string>() << "\n";
    if (t.at("suggestions").empty()) {
      os << "  no single-edge change makes the group controllable\n";
    } else {
      for (const auto& sug : t.at("suggestions"))
        os << "  flip (" << name_list(sug.at("edge")) << ") -> "
           << sug.at("new_relation").get<std::string>() << ": polynomial "
           << sug.at("polynomial").get<std::string>() << "\n";
    }
  } else if (type == "forward") {
    os << " subject=" << t.at("subject").get<std::string>() << "\n";
    os << "  A = " << t.at("a_value").get<std::string>()
       << ", B = " << t.at("b_value").get<std::string>() << "\n";
    if (t.at("frustrated").get<bool>())
      os << "  frustration\n";
    else
      os << "  D = " << choice_set(t.at("choices")) << "\n";
  } else if (type == "forward-sweep") {
    os << " subject=" << t.at("subject").get<std::string>() << "\n";
    os << "  influences " << tuple_line(t.at("variables")) << ":\n";
    for (const auto& row : t.at("rows")) {
      os << "  " << tuple_line(row.at("influences")) << " -> ";
      if (row.at("frustrated").get<bool>())
        os << "frustration";
      else
        os << "D = " << choice_set(row.at("choices"));
      if (row.contains("robot_choice"))
        os << "; robot chooses " << row.at("robot_choice").get<std::string>()
           << " [" << row.at("robot_source").get<std::string>() << "]";
      os << "\n";
    }
  } else if (type == "inverse") {
    os << " subject=" << t.at("subject").get<std::string>();
    const std::string upper = t.at("upper").get<std::string>();
    const std::string lower = t.at("lower").get<std::string>();
    if (upper == lower)
      os << " target=" << upper;
    else
      os << " upper=" << upper << " lower=" << lower;
    os << " mode=" << t.at("mode").get<std::string>() << "\n";
    if (!t.at("fixed").empty()) {
      os << "  fixed:";
      for (const auto& [var, value] : t.at("fixed").items())
        os << " " << var << "=" << value.get<std::string>();
      os << "\n";
    }
    os << "  free variables: " << tuple_line(t.at("variables")) << "\n";
    os << "  " << counted(t.at("strategies").size(), "strategy", "strategies")
       << ":\n";
    render_strategies(os, t.at("strategies"), "  ");
  } else if (type == "feasible-targets") {
    os << " subject=" << t.at("subject").get<std::string>()
       << " mode=" << t.at("mode").get<std::string>() << "\n";
    os << "  free variables: " << tuple_line(t.at("variables")) << "\n";
    std::string dh;
    for (const auto& target : t.at("targets")) {
      if (!dh.empty()) dh += ", ";
      dh += target.at("alternative").get<std::string>();
    }
    os << "  D_h = {" << dh << "}\n";
    for (const auto& target : t.at("targets")) {
      os << "  target " << target.at("alternative").get<std::string>() << ": "
         << counted(target.at("strategies").size(), "strategy", "strategies")
         << "\n";
      render_strategies(os, target.at("strategies"), "    ");
    }
  } else if (type == "frustration") {
    os << " subject=" << t.at("subject").get<std::string>() << "\n";
    os << "  free variables: " << tuple_line(t.at("variables")) << "\n";
    os << "  "
       << counted(t.at("assignments").size(), "joint influence causes",
                  "joint influences cause")
       << " frustration:\n";
    render_strategies(os, t.at("assignments"), "  ");
  } else if (type == "agent-step") {
    os << " robot=" << t.at("robot").get<std::string>() << "\n";
    os << "  approved set U = " << choice_set(t.at("approved")) << "\n";
    if (t.at("decision").is_null()) {
      os << "  module 1: skipped (" << t.at("decision_note").get<std::string>()
         << ")\n";
    } else {
      const json& d = t.at("decision");
      os << "  module 1: A = " << d.at("a_value").get<std::string>()
         << ", B = " << d.at("b_value").get<std::string>() << "; ";
      if (d.at("frustrated").get<bool>())
        os << "frustration";
      else
        os << "D = " << choice_set(d.at("choices"));
      os << "; robot chooses " << d.at("chosen").get<std::string>() << " ["
         << d.at("source").get<std::string>() << "]\n";
    }
    if (t.contains("control")) {
      const json& c = t.at("control");
      os << "  module 3 (control subject " << c.at("subject").get<std::string>()
         << ", mode " << c.at("mode").get<std::string>() << "):\n";
      const json& p = c.at("plan");
      const std::string kind = p.at("kind").get<std::string>();
      if (kind == "steer-approved" || kind == "steer-from-zu") {
        os << "    plan: steer to " << p.at("target").get<std::string>()
           << " via " << tuple_line(c.at("variables")) << " = "
           << tuple_line(p.at("strategy")) << "\n";
      } else if (kind == "frustrate") {
        os << "    plan: frustrate ("
           << counted(p.at("frustration").size(), "joint influence",
                      "joint influences")
           << " over " << tuple_line(c.at("variables")) << ")\n";
        render_strategies(os, p.at("frustration"), "    ");
      } else {
        os << "    plan: uncontrollable (no steering strategy, no frustrating "
              "influence)\n";
      }
    }
  }
}

std::string render_table(const json& report) {
  std::ostringstream os;
  os << "scenario: " << report.at("scenario").get<std::string>() << "\n";
  os << "engine: " << report.at("engine").get<std::string>() << "\n";

  os << "universe: ";
  const json& universe = report.at("universe");
  const json& actions = universe.at("actions");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (i) os << ", ";
    os << actions[i].at("name").get<std::string>();
    if (actions[i].at("risky").get<bool>()) os << " (risky)";
  }
  os << " | inaction "
     << (universe.at("inaction_forbidden").get<bool>() ? "forbidden" : "allowed")
     << "\n";

  os << "subjects: ";
  const json& subjects = report.at("subjects");
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    if (i) os << ", ";
    os << subjects[i].at("id").get<std::string>() << " ("
       << subjects[i].at("kind").get<std::string>() << ")";
  }
  os << "\n";

  os << "polynomial: " << report.at("polynomial").get<std::string>() << "\n";
  if (!report.at("excluded").empty())
    os << "excluded: " << name_list(report.at("excluded")) << "\n";

  const json& tasks = report.at("tasks");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    os << "\n";
    render_task(os, tasks[i], i + 1);
  }
  return os.str();
}

}  // namespace

std::string render_report(const json& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report.dump(2) + "\n";
  return render_table(report);
}

}  // namespace rgt
