#include "rgt/agents.hpp"

#include <algorithm>

namespace rgt {

std::vector<Alternative> compute_U(const UniversePtr& universe,
                                   const AsimovPolicy& policy) {
  std::uint32_t risky_mask = 0;
  for (const auto& name : policy.risky) {
    const auto idx = universe->index_of(name);
    if (!idx)
      throw ValidationError("risky action '" + name +
                            "' is not in the universe");
    risky_mask |= 1u << *idx;
  }

  std::vector<Alternative> u;
  for (const auto& alt : enumerate_alternatives(universe)) {
    if (alt.members() & risky_mask) continue;
    if (policy.inaction_forbidden && alt.is_empty()) continue;
    u.push_back(alt);
  }
  if (u.empty())
    throw PolicyError("Asimov policy leaves no approved alternative");
  return u;
}

RobotDecision interaction1(const DecisionOutcome& outcome,
                           const std::vector<Alternative>& u) {
  if (u.empty()) throw PolicyError("approved set must not be empty");
  for (const auto& approved : u)
    for (const auto& choice : outcome.choices)
      if (choice == approved)
        return {approved, RobotDecision::Source::FromDU};
  return {u.front(), RobotDecision::Source::FromU};
}

std::vector<Strategy> frustration_strategies(
    const BooleanFunction& a, const BooleanFunction& b,
    const std::map<std::string, Alternative>& fixed,
    const UniversePtr& universe) {
  std::vector<Strategy> out;
  for_each_joint_influence(a, b, fixed, universe,
                           [&](const Strategy& assignment,
                               const Alternative& a_value,
                               const Alternative& b_value) {
                             if (!subset_of(b_value, a_value))
                               out.push_back(assignment);
                           });
  return out;
}

ControlPlan interaction2(const BooleanFunction& a, const BooleanFunction& b,
                         const std::map<std::string, Alternative>& fixed,
                         const FeasibleTargets& feasible,
                         const std::vector<Alternative>& u,
                         const std::string& subject,
                         const UniversePtr& universe) {
  const auto approved = [&](const Alternative& chi) {
    return std::find(u.begin(), u.end(), chi) != u.end();
  };

  // D_h ∩ U: both lists are canonical, so the first hit is the choice.
  for (std::size_t i = 0; i < feasible.targets.size(); ++i)
    if (approved(feasible.targets[i]))
      return {ControlPlan::Kind::SteerApproved, subject, feasible.targets[i],
              feasible.strategies[i].front(), {}};

  // Z_U: strategy sets of approved alternatives. With D_h ∩ U empty this
  // is empty too (Z_h only stores nonempty sets); kept for the schema's
  // explicit second gate.
  for (std::size_t i = 0; i < feasible.targets.size(); ++i)
    if (approved(feasible.targets[i]) && !feasible.strategies[i].empty())
      return {ControlPlan::Kind::SteerFromZU, subject, feasible.targets[i],
              feasible.strategies[i].front(), {}};

  auto frustration = frustration_strategies(a, b, fixed, universe);
  if (!frustration.empty())
    return {ControlPlan::Kind::Frustrate, subject, std::nullopt, std::nullopt,
            std::move(frustration)};
  return {ControlPlan::Kind::Uncontrollable, subject, std::nullopt,
          std::nullopt, {}};
}

std::vector<RelationChange> suggest_relation_change(const RelationshipGraph& g,
                                                    const std::string& actor) {
  const auto& subjects = g.subjects();
  if (std::find(subjects.begin(), subjects.end(), actor) == subjects.end())
    throw ValidationError("actor '" + actor + "' is not in the group");

  const auto poly = decompose(g);
  if (!poly)
    throw ValidationError("group is not decomposable; nothing to suggest");
  if (!is_super_active(fold(*poly).function))
    throw ValidationError(
        "relationship changes are only suggested for super-active groups");

  std::vector<RelationChange> out;
  for (const auto& other : subjects) {
    if (other == actor) continue;
    const Relation current = g.relation(actor, other);
    const Relation flipped = current == Relation::Alliance
                                 ? Relation::Conflict
                                 : Relation::Alliance;
    const RelationshipGraph changed = g.with_relation(actor, other, flipped);
    const auto changed_poly = decompose(changed);
    if (!changed_poly) continue;
    if (is_super_active(fold(*changed_poly).function)) continue;
    RelationshipGraph::Edge edge =
        actor < other ? RelationshipGraph::Edge{actor, other}
                      : RelationshipGraph::Edge{other, actor};
    out.push_back({std::move(edge), flipped, std::move(*changed_poly)});
  }
  std::sort(out.begin(), out.end(),
            [](const RelationChange& x, const RelationChange& y) {
              return x.edge < y.edge;
            });
  return out;
}

}  // namespace rgt
