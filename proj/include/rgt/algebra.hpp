#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgt/errors.hpp"

namespace rgt {

/// An elementary action of the universal set. Actions flagged risky are
/// filtered out of a robot's approved set (see agents.hpp).
struct Action {
  std::string name;
  bool risky = false;
};

/// The universal set of elementary actions. Alternatives are its subsets.
/// The declared action order is fixed and defines the canonical
/// enumeration: action 0 is the least significant bit of the
/// characteristic number.
class Universe {
 public:
  static constexpr std::size_t kMaxActions = 16;

  explicit Universe(std::vector<Action> actions);

  std::size_t size() const { return actions_.size(); }
  const std::vector<Action>& actions() const { return actions_; }
  const Action& action(std::size_t i) const { return actions_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::uint32_t full_mask() const {
    return static_cast<std::uint32_t>((1u << actions_.size()) - 1u);
  }
  std::uint32_t risky_mask() const;

  bool same_actions(const Universe& other) const;

 private:
  std::vector<Action> actions_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<Action> actions);
UniversePtr make_universe(std::initializer_list<std::string> names);

/// A subset of the universal set: one choice value a subject can take.
/// Stored as a characteristic bit vector over the universe's actions.
/// Alternatives from different universes never mix; every binary
/// operation checks compatibility and throws rgt::Error on mismatch.
class Alternative {
 public:
  Alternative(UniversePtr universe, std::uint32_t members);

  static Alternative empty_set(const UniversePtr& u) { return {u, 0u}; }
  static Alternative full_set(const UniversePtr& u) {
    return {u, u->full_mask()};
  }

  std::uint32_t members() const { return members_; }
  const UniversePtr& universe() const { return universe_; }

  bool contains(std::size_t action_index) const {
    return (members_ >> action_index) & 1u;
  }
  bool is_empty() const { return members_ == 0u; }
  bool is_full() const { return members_ == universe_->full_mask(); }

  bool operator==(const Alternative& other) const;
  bool operator!=(const Alternative& other) const { return !(*this == other); }

 private:
  UniversePtr universe_;
  std::uint32_t members_;
};

/// Characteristic-number order; total within one universe.
bool canonical_less(const Alternative& a, const Alternative& b);

Alternative unite(const Alternative& x, const Alternative& y);
Alternative intersect(const Alternative& x, const Alternative& y);
Alternative complement(const Alternative& x);
bool subset_of(const Alternative& x, const Alternative& y);  // x ⊆ y

inline Alternative operator|(const Alternative& x, const Alternative& y) {
  return unite(x, y);
}
inline Alternative operator&(const Alternative& x, const Alternative& y) {
  return intersect(x, y);
}
inline Alternative operator~(const Alternative& x) { return complement(x); }

enum class SetConnective { Union, Intersect, Complement };

/// Single entry point for the three set connectives. `y` must be null
/// exactly when `kind` is Complement.
Alternative connective(SetConnective kind, const Alternative& x,
                       const Alternative* y = nullptr);

/// The exponential operation of the algebra: base^w = base + ~w.
/// Folding a diagonal form is repeated application of this.
Alternative exponential(const Alternative& base, const Alternative& w);

/// All 2^n subsets in ascending characteristic-number order
/// (empty set first, full set last).
std::vector<Alternative> enumerate_alternatives(const UniversePtr& u);

/// All z with lower ⊆ z ⊆ upper, ascending. Empty when lower ⊄ upper.
std::vector<Alternative> interval_members(const Alternative& upper,
                                          const Alternative& lower);

/// Textual alternative syntax shared with the CLI:
///   "0" or "{}"  — empty set
///   "1"          — the full universe
///   "{alpha}" / "{alpha,beta}" — named members, order-insensitive.
/// Whitespace is ignored everywhere.
Alternative parse_alternative(std::string_view text, const UniversePtr& u);

/// Canonical rendering: "0", "1", or "{a,b}" with actions in declared
/// order. parse_alternative(to_string(x)) == x.
std::string to_string(const Alternative& x);

}  // namespace rgt
