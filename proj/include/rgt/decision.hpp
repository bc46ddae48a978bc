#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgt/boolfn.hpp"

namespace rgt {

/// The decision equation x = Ax + B~x for one subject. A is the cofactor
/// of the folded form W at subject = 1, B the cofactor at subject = 0;
/// neither depends on the subject. When W does not mention the subject at
/// all, A = B = W (the equation degenerates to an equality).
struct CanonicalEquation {
  std::string subject;
  BooleanFunction a;
  BooleanFunction b;
};

CanonicalEquation canonicalize(const BooleanFunction& w,
                               const std::string& subject);

/// Influences of every subject on every other subject. Rows are the
/// influencer, columns the influenced; the diagonal stays empty (a
/// subject's own cell holds its variable, not a value).
class InfluenceMatrix {
 public:
  void set(const std::string& influencer, const std::string& target,
           Alternative value);
  std::optional<Alternative> get(const std::string& influencer,
                                 const std::string& target) const;
  /// All influences onto `target`, keyed by influencer.
  std::map<std::string, Alternative> column(const std::string& target) const;
  bool empty() const { return cells_.empty(); }

 private:
  std::map<std::pair<std::string, std::string>, Alternative> cells_;
};

/// Result of the Forward task. `choices` lists every solution of the
/// decision equation in canonical order; an empty list means the equation
/// has no solution and the subject is frustrated.
struct DecisionOutcome {
  Alternative a_value;
  Alternative b_value;
  std::vector<Alternative> choices;

  bool frustrated() const { return choices.empty(); }
};

/// Evaluates A and B under the given influences and solves
/// B ⊆ x ⊆ A. Throws when an influence required by A or B is missing.
DecisionOutcome forward_solve(const CanonicalEquation& eq,
                              const std::map<std::string, Alternative>& influences,
                              const UniversePtr& universe);

/// A folded form that is constantly 1 forces every subject to choose the
/// full set no matter what anyone does.
bool is_super_active(const BooleanFunction& w);

}  // namespace rgt
