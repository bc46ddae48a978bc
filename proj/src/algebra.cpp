#include "rgt/algebra.hpp"

#include <algorithm>
#include <cctype>

namespace rgt {

namespace {

void require_compatible(const Alternative& x, const Alternative& y) {
  if (x.universe() == y.universe()) return;
  if (x.universe()->same_actions(*y.universe())) return;
  throw Error("universe mismatch: alternatives belong to different universes");
}

}  // namespace

Universe::Universe(std::vector<Action> actions) : actions_(std::move(actions)) {
  if (actions_.empty() || actions_.size() > kMaxActions)
    throw ValidationError("universe must declare between 1 and 16 actions");
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (actions_[i].name.empty())
      throw ValidationError("action names must be non-empty");
    for (std::size_t j = i + 1; j < actions_.size(); ++j)
      if (actions_[i].name == actions_[j].name)
        throw ValidationError("duplicate action name: " + actions_[i].name);
  }
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < actions_.size(); ++i)
    if (actions_[i].name == name) return i;
  return std::nullopt;
}

std::uint32_t Universe::risky_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < actions_.size(); ++i)
    if (actions_[i].risky) mask |= 1u << i;
  return mask;
}

bool Universe::same_actions(const Universe& other) const {
  if (actions_.size() != other.actions_.size()) return false;
  for (std::size_t i = 0; i < actions_.size(); ++i)
    if (actions_[i].name != other.actions_[i].name) return false;
  return true;
}

UniversePtr make_universe(std::vector<Action> actions) {
  return std::make_shared<const Universe>(std::move(actions));
}

UniversePtr make_universe(std::initializer_list<std::string> names) {
  std::vector<Action> actions;
  for (const auto& n : names) actions.push_back({n, false});
  return make_universe(std::move(actions));
}

Alternative::Alternative(UniversePtr universe, std::uint32_t members)
    : universe_(std::move(universe)), members_(members) {
  if (!universe_) throw Error("alternative requires a universe");
  if (members_ & ~universe_->full_mask())
    throw Error("alternative members outside the universe");
}

bool Alternative::operator==(const Alternative& other) const {
  require_compatible(*this, other);
  return members_ == other.members_;
}

bool canonical_less(const Alternative& a, const Alternative& b) {
  require_compatible(a, b);
  return a.members() < b.members();
}

Alternative unite(const Alternative& x, const Alternative& y) {
  require_compatible(x, y);
  return {x.universe(), x.members() | y.members()};
}

Alternative intersect(const Alternative& x, const Alternative& y) {
  require_compatible(x, y);
  return {x.universe(), x.members() & y.members()};
}

Alternative complement(const Alternative& x) {
  return {x.universe(), ~x.members() & x.universe()->full_mask()};
}

bool subset_of(const Alternative& x, const Alternative& y) {
  require_compatible(x, y);
  return (x.members() & ~y.members()) == 0u;
}

Alternative connective(SetConnective kind, const Alternative& x,
                       const Alternative* y) {
  if (kind == SetConnective::Complement) {
    if (y) throw Error("complement takes a single operand");
    return complement(x);
  }
  if (!y) throw Error("union and intersection take two operands");
  return kind == SetConnective::Union ? unite(x, *y) : intersect(x, *y);
}

Alternative exponential(const Alternative& base, const Alternative& w) {
  return unite(base, complement(w));
}

std::vector<Alternative> enumerate_alternatives(const UniversePtr& u) {
  std::vector<Alternative> out;
  const std::uint32_t full = u->full_mask();
  out.reserve(static_cast<std::size_t>(full) + 1);
  for (std::uint32_t m = 0;; ++m) {
    out.emplace_back(u, m);
    if (m == full) break;
  }
  return out;
}

std::vector<Alternative> interval_members(const Alternative& upper,
                                          const Alternative& lower) {
  require_compatible(upper, lower);
  std::vector<Alternative> out;
  if (!subset_of(lower, upper)) return out;
  const std::uint32_t diff = upper.members() & ~lower.members();
  // z = lower | s for every s ⊆ diff; disjoint OR keeps ascending order.
  std::uint32_t s = 0;
  do {
    out.emplace_back(upper.universe(), lower.members() | s);
    s = (s - diff) & diff;
  } while (s != 0);
  return out;
}

Alternative parse_alternative(std::string_view text, const UniversePtr& u) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

  if (compact.empty())
    throw ParseError("empty alternative", 0);
  if (compact == "0" || compact == "{}") return Alternative::empty_set(u);
  if (compact == "1") return Alternative::full_set(u);
  if (compact.front() != '{' || compact.back() != '}')
    throw ParseError("alternative must be 0, 1, or {name,...}", 0);

  std::uint32_t members = 0;
  std::size_t pos = 1;
  const std::string body = compact.substr(1, compact.size() - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string name =
        body.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (name.empty())
      throw ParseError("empty action name in alternative", pos + start);
    const auto idx = u->index_of(name);
    if (!idx)
      throw ParseError("unknown action '" + name + "'", pos + start);
    members |= 1u << *idx;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {u, members};
}

std::string to_string(const Alternative& x) {
  if (x.is_empty()) return "0";
  if (x.is_full()) return "1";
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < x.universe()->size(); ++i) {
    if (!x.contains(i)) continue;
    if (!first) out += ",";
    out += x.universe()->action(i).name;
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace rgt
