#include "rgt/decision.hpp"

#include <algorithm>

namespace rgt {

CanonicalEquation canonicalize(const BooleanFunction& w,
                               const std::string& subject) {
  const BooleanFunction restricted = w.support_restricted();
  const auto& vars = restricted.variables();
  const bool mentions =
      std::find(vars.begin(), vars.end(), subject) != vars.end();
  if (!mentions) return {subject, restricted, restricted};
  return {subject, restricted.cofactor(subject, true).support_restricted(),
          restricted.cofactor(subject, false).support_restricted()};
}

void InfluenceMatrix::set(const std::string& influencer,
                          const std::string& target, Alternative value) {
  if (influencer == target)
    throw ValidationError("subject '" + influencer +
                          "' cannot influence itself");
  cells_.insert_or_assign({influencer, target}, std::move(value));
}

std::optional<Alternative> InfluenceMatrix::get(const std::string& influencer,
                                                const std::string& target) const {
  const auto it = cells_.find({influencer, target});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

std::map<std::string, Alternative> InfluenceMatrix::column(
    const std::string& target) const {
  std::map<std::string, Alternative> out;
  for (const auto& [key, value] : cells_)
    if (key.second == target) out.insert({key.first, value});
  return out;
}

DecisionOutcome forward_solve(const CanonicalEquation& eq,
                              const std::map<std::string, Alternative>& influences,
                              const UniversePtr& universe) {
  const Alternative a_value = eq.a.evaluate(influences, universe);
  const Alternative b_value = eq.b.evaluate(influences, universe);
  return {a_value, b_value, interval_members(a_value, b_value)};
}

bool is_super_active(const BooleanFunction& w) { return w.is_constant(true); }

}  // namespace rgt
