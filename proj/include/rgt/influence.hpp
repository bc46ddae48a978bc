#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rgt/decision.hpp"

namespace rgt {

/// P~Q + ~PQ. Zero exactly when P = Q, which reduces solving a set
/// equation to solving a zero equation.
Alternative equality_residual(const Alternative& p, const Alternative& q);

/// A concrete solution interval upper ⊇ x ⊇ lower.
struct Interval {
  Alternative upper;
  Alternative lower;

  bool empty() const { return !subset_of(lower, upper); }
  std::vector<Alternative> members() const {
    return interval_members(upper, lower);
  }
};

/// Solutions of A1·x + B1·~x = 0: the interval ~A1 ⊇ x ⊇ B1
/// (possibly empty).
Interval solve_zero_canonical(const Alternative& a1, const Alternative& b1);

/// Symbolic solution interval of a two-operand equation in one variable,
/// parameterized by the other operand. Instantiating the co-variable
/// yields the concrete bounds:
///   sum      x_i + x_j = chi:  chi ⊇ x_i ⊇ ~chi·x_j + ~x_j·chi
///   product  x_i · x_j = chi:  chi·x_j + ~chi·~x_j ⊇ x_i ⊇ chi
struct IntervalFormula {
  enum class Equation { Sum, Product };
  Equation equation;
  Alternative chi;

  Interval at(const Alternative& xj) const;
};

Interval solve_sum(const Alternative& chi, const Alternative& xj);
Interval solve_product(const Alternative& chi, const Alternative& xj);

/// The choice an influence system steers the controlled subject to:
/// the outcome interval chi1 ⊇ x ⊇ chi2, or a single alternative when
/// the bounds coincide.
struct TargetChoice {
  TargetChoice(Alternative upper, Alternative lower);
  Alternative chi1;
  Alternative chi2;

  bool single() const { return chi1 == chi2; }
};

/// One joint influence: values for every free variable, keyed by name.
using Strategy = std::map<std::string, Alternative>;

/// Variables A and B actually depend on, in sorted order.
std::vector<std::string> effective_variables(const BooleanFunction& a,
                                             const BooleanFunction& b);

struct InfluenceSystem {
  BooleanFunction a;
  BooleanFunction b;
  TargetChoice target;
  std::map<std::string, Alternative> fixed;
  UniversePtr universe;
};

/// Visits every joint assignment of the unfixed effective variables of A
/// and B, in ascending characteristic-number tuple order, passing the
/// assignment and the evaluated A and B values. Shared driver of all the
/// exhaustive solvers and planners.
void for_each_joint_influence(
    const BooleanFunction& a, const BooleanFunction& b,
    const std::map<std::string, Alternative>& fixed, const UniversePtr& universe,
    const std::function<void(const Strategy&, const Alternative& a_value,
                             const Alternative& b_value)>& visit);

/// Exhaustive solution of the system A = chi1, B = chi2 over all joint
/// assignments of the free variables. Every returned strategy forces the
/// subject's outcome to be exactly the target interval (re-verified by
/// substitution). Strategies are ordered by ascending characteristic-number
/// tuples over the lexicographically sorted free variables.
std::vector<Strategy> solve_system(const InfluenceSystem& sys);

/// Solutions of the single influence equation chi = A·chi + B·~chi, i.e.
/// the joint influences under which chi is *among* the subject's possible
/// choices (B ⊆ chi ⊆ A). A strict superset of solve_system with a
/// single-alternative target: the system additionally pins the whole
/// outcome interval to {chi}.
std::vector<Strategy> solve_equation(const BooleanFunction& a,
                                     const BooleanFunction& b,
                                     const Alternative& chi,
                                     const std::map<std::string, Alternative>& fixed,
                                     const UniversePtr& universe);

enum class SolveMode { System, Equation };

/// D_h/Z_h extraction: for every alternative chi in canonical order, solve
/// the single-target task; keep the pairs whose strategy set is nonempty.
/// targets[i] pairs with strategies[i].
struct FeasibleTargets {
  std::vector<Alternative> targets;               // D_h
  std::vector<std::vector<Strategy>> strategies;  // Z_h
};

FeasibleTargets feasible_targets(const BooleanFunction& a,
                                 const BooleanFunction& b,
                                 const std::map<std::string, Alternative>& fixed,
                                 const UniversePtr& universe,
                                 SolveMode mode = SolveMode::System);

}  // namespace rgt
