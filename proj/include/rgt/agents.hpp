#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rgt/group.hpp"
#include "rgt/influence.hpp"

namespace rgt {

/// Declarative rendering of the First Law for one scenario: which actions
/// count as risky, and whether inaction (the empty alternative) is itself
/// unacceptable.
struct AsimovPolicy {
  std::set<std::string> risky;
  bool inaction_forbidden = false;
};

/// The approved set U: every alternative containing no risky action,
/// minus the empty set when inaction is forbidden, in canonical order.
/// Throws PolicyError when nothing survives the filter.
std::vector<Alternative> compute_U(const UniversePtr& universe,
                                   const AsimovPolicy& policy);

struct RobotDecision {
  enum class Source { FromDU, FromU };
  Alternative chosen;
  Source source;
};

/// Interaction Module 1: intersect the robot's own choice set with U and
/// pick the canonically-first member; fall back to the first member of U
/// when the intersection is empty (including frustration).
RobotDecision interaction1(const DecisionOutcome& outcome,
                           const std::vector<Alternative>& u);

/// How a controlled subject can be steered.
struct ControlPlan {
  enum class Kind {
    SteerApproved,   // some approved alternative is exactly reachable
    SteerFromZU,     // reachable via the Z_U construction
    Frustrate,       // only option: influences that leave no solution
    Uncontrollable,  // nothing works, not even frustration
  };
  Kind kind;
  std::string subject;
  std::optional<Alternative> target;    // steer plans
  std::optional<Strategy> strategy;     // steer plans
  std::vector<Strategy> frustration;    // frustrate plans
};

/// Interaction Module 2 for one controlled subject. `feasible` must come
/// from feasible_targets over the same A, B, fixed.
ControlPlan interaction2(const BooleanFunction& a, const BooleanFunction& b,
                         const std::map<std::string, Alternative>& fixed,
                         const FeasibleTargets& feasible,
                         const std::vector<Alternative>& u,
                         const std::string& subject,
                         const UniversePtr& universe);

/// All free-variable assignments under which the subject's decision
/// equation has no solution (B ⊄ A), in canonical order.
std::vector<Strategy> frustration_strategies(
    const BooleanFunction& a, const BooleanFunction& b,
    const std::map<std::string, Alternative>& fixed,
    const UniversePtr& universe);

struct RelationChange {
  RelationshipGraph::Edge edge;
  Relation new_relation;
  Polynomial polynomial;
};

/// For a super-active group: single-edge flips incident to `actor` whose
/// new graph decomposes into a non-super-active polynomial, in canonical
/// edge order. Throws unless the group's fold really is constant 1.
std::vector<RelationChange> suggest_relation_change(const RelationshipGraph& g,
                                                    const std::string& actor);

}  // namespace rgt
