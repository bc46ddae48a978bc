#include "rgt/influence.hpp"

#include <algorithm>

namespace rgt {

Alternative equality_residual(const Alternative& p, const Alternative& q) {
  return (p & ~q) | (~p & q);
}

Interval solve_zero_canonical(const Alternative& a1, const Alternative& b1) {
  return {~a1, b1};
}

Interval IntervalFormula::at(const Alternative& xj) const {
  if (equation == Equation::Sum)
    return {chi, equality_residual(chi, xj)};
  return {~equality_residual(chi, xj), chi};
}

Interval solve_sum(const Alternative& chi, const Alternative& xj) {
  return IntervalFormula{IntervalFormula::Equation::Sum, chi}.at(xj);
}

Interval solve_product(const Alternative& chi, const Alternative& xj) {
  return IntervalFormula{IntervalFormula::Equation::Product, chi}.at(xj);
}

TargetChoice::TargetChoice(Alternative upper, Alternative lower)
    : chi1(std::move(upper)), chi2(std::move(lower)) {
  if (!subset_of(chi2, chi1))
    throw ValidationError("target choice requires lower to be a subset of upper");
}

std::vector<std::string> effective_variables(const BooleanFunction& a,
                                             const BooleanFunction& b) {
  const BooleanFunction ra = a.support_restricted();
  const BooleanFunction rb = b.support_restricted();
  std::vector<std::string> out = ra.variables();
  for (const auto& v : rb.variables())
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Upper bound on (2^actions)^free joint assignments per enumeration.
constexpr std::uint64_t kMaxAssignments = std::uint64_t{1} << 24;

}  // namespace

void for_each_joint_influence(
    const BooleanFunction& a, const BooleanFunction& b,
    const std::map<std::string, Alternative>& fixed, const UniversePtr& universe,
    const std::function<void(const Strategy&, const Alternative&,
                             const Alternative&)>& visit) {
  const auto effective = effective_variables(a, b);
  for (const auto& [name, value] : fixed) {
    if (std::find(effective.begin(), effective.end(), name) == effective.end())
      throw ValidationError("fixed variable '" + name +
                            "' is not an effective variable");
    if (!value.universe()->same_actions(*universe))
      throw Error("universe mismatch in fixed influence for '" + name + "'");
  }
  std::vector<std::string> free_vars;
  for (const auto& v : effective)
    if (!fixed.count(v)) free_vars.push_back(v);

  const std::uint64_t per_var = std::uint64_t{1} << universe->size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free_vars.size(); ++i) {
    total *= per_var;
    if (total > kMaxAssignments)
      throw Error("influence enumeration too large for brute force");
  }

  const std::size_t k = free_vars.size();
  std::vector<std::uint32_t> odometer(k, 0);
  for (;;) {
    Strategy assignment;
    std::map<std::string, Alternative> full = fixed;
    for (std::size_t i = 0; i < k; ++i) {
      Alternative value(universe, odometer[i]);
      assignment.insert({free_vars[i], value});
      full.insert({free_vars[i], value});
    }
    visit(assignment, a.evaluate(full, universe), b.evaluate(full, universe));

    // Advance with the last variable cycling fastest so that tuples come
    // out in ascending characteristic-number order.
    std::size_t pos = k;
    bool done = (k == 0);
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < per_var) break;
      odometer[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) return;
  }
}

std::vector<Strategy> solve_system(const InfluenceSystem& sys) {
  std::vector<Strategy> strategies;
  for_each_joint_influence(
      sys.a, sys.b, sys.fixed, sys.universe,
      [&](const Strategy& assignment, const Alternative& a_value,
          const Alternative& b_value) {
        if (a_value == sys.target.chi1 && b_value == sys.target.chi2)
          strategies.push_back(assignment);
      });

  // Substitution check: each strategy must pin the outcome interval to
  // exactly [chi2, chi1].
  const CanonicalEquation eq{"", sys.a, sys.b};
  const auto expected = interval_members(sys.target.chi1, sys.target.chi2);
  for (const auto& strategy : strategies) {
    std::map<std::string, Alternative> full = sys.fixed;
    full.insert(strategy.begin(), strategy.end());
    const DecisionOutcome outcome = forward_solve(eq, full, sys.universe);
    if (outcome.choices != expected)
      throw Error("influence system verification failed");
  }
  return strategies;
}

std::vector<Strategy> solve_equation(const BooleanFunction& a,
                                     const BooleanFunction& b,
                                     const Alternative& chi,
                                     const std::map<std::string, Alternative>& fixed,
                                     const UniversePtr& universe) {
  std::vector<Strategy> strategies;
  for_each_joint_influence(
      a, b, fixed, universe,
      [&](const Strategy& assignment, const Alternative& a_value,
          const Alternative& b_value) {
        // The decision equation turns into a true equality at chi.
        if (((a_value & chi) | (b_value & ~chi)) == chi)
          strategies.push_back(assignment);
      });
  return strategies;
}

FeasibleTargets feasible_targets(const BooleanFunction& a,
                                 const BooleanFunction& b,
                                 const std::map<std::string, Alternative>& fixed,
                                 const UniversePtr& universe, SolveMode mode) {
  FeasibleTargets out;
  for (const auto& chi : enumerate_alternatives(universe)) {
    std::vector<Strategy> z =
        mode == SolveMode::System
            ? solve_system({a, b, TargetChoice(chi, chi), fixed, universe})
            : solve_equation(a, b, chi, fixed, universe);
    if (z.empty()) continue;
    out.targets.push_back(chi);
    out.strategies.push_back(std::move(z));
  }
  return out;
}

}  // namespace rgt
