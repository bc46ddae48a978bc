#include "rgt/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace rgt {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace

BooleanFunction::BooleanFunction(std::vector<std::string> variables,
                                 std::vector<std::uint8_t> table)
    : vars_(std::move(variables)), table_(std::move(table)) {
  if (vars_.size() > kMaxVariables)
    throw Error("boolean function exceeds the variable cap");
  if (!std::is_sorted(vars_.begin(), vars_.end()) ||
      std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
    throw Error("boolean function variables must be sorted and unique");
  if (table_.size() != (std::size_t{1} << vars_.size()))
    throw Error("truth table size does not match the variable count");
  for (auto& v : table_) v = v ? 1 : 0;
}

BooleanFunction BooleanFunction::constant(bool value) {
  return {{}, {static_cast<std::uint8_t>(value ? 1 : 0)}};
}

BooleanFunction BooleanFunction::variable(std::string name) {
  return {{std::move(name)}, {0, 1}};
}

bool BooleanFunction::is_constant(bool value) const {
  const std::uint8_t want = value ? 1 : 0;
  return std::all_of(table_.begin(), table_.end(),
                     [&](std::uint8_t b) { return b == want; });
}

bool BooleanFunction::depends_on(const std::string& var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return false;
  const std::size_t pos = static_cast<std::size_t>(it - vars_.begin());
  const std::size_t flip = std::size_t{1} << pos;
  for (std::size_t row = 0; row < table_.size(); ++row)
    if ((row & flip) == 0 && table_[row] != table_[row | flip]) return true;
  return false;
}

BooleanFunction BooleanFunction::cofactor(const std::string& var,
                                          bool value) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return *this;
  const std::size_t pos = static_cast<std::size_t>(it - vars_.begin());

  std::vector<std::string> vars = vars_;
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(pos));
  std::vector<std::uint8_t> table(table_.size() / 2);
  const std::size_t low_mask = (std::size_t{1} << pos) - 1;
  for (std::size_t row = 0; row < table.size(); ++row) {
    std::size_t src = (row & low_mask) | ((row & ~low_mask) << 1);
    if (value) src |= std::size_t{1} << pos;
    table[row] = table_[src];
  }
  return {std::move(vars), std::move(table)};
}

BooleanFunction BooleanFunction::support_restricted() const {
  BooleanFunction out = *this;
  for (const auto& v : vars_)
    if (!out.depends_on(v)) out = out.cofactor(v, false);
  return out;
}

bool BooleanFunction::evaluate_bits(
    const std::map<std::string, bool>& assignment) const {
  std::size_t row = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = assignment.find(vars_[i]);
    if (it == assignment.end())
      throw Error("missing value for variable '" + vars_[i] + "'");
    if (it->second) row |= std::size_t{1} << i;
  }
  return bit(row);
}

Alternative BooleanFunction::evaluate(
    const std::map<std::string, Alternative>& assignment,
    const UniversePtr& universe) const {
  std::vector<std::uint32_t> operands;
  operands.reserve(vars_.size());
  for (const auto& v : vars_) {
    const auto it = assignment.find(v);
    if (it == assignment.end())
      throw Error("missing influence value for variable '" + v + "'");
    if (!it->second.universe()->same_actions(*universe))
      throw Error("universe mismatch in assignment for variable '" + v + "'");
    operands.push_back(it->second.members());
  }
  std::uint32_t result = 0;
  for (std::size_t action = 0; action < universe->size(); ++action) {
    std::size_t row = 0;
    for (std::size_t i = 0; i < operands.size(); ++i)
      if ((operands[i] >> action) & 1u) row |= std::size_t{1} << i;
    if (bit(row)) result |= 1u << action;
  }
  return {universe, result};
}

bool BooleanFunction::operator==(const BooleanFunction& other) const {
  return vars_ == other.vars_ && table_ == other.table_;
}

BooleanFunction BooleanFunction::extended_to(
    const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> position;  // for each own var, its bit in `vars`
  for (const auto& v : vars_) {
    const auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end())
      throw Error("extended_to: variable list does not cover '" + v + "'");
    position.push_back(static_cast<std::size_t>(it - vars.begin()));
  }
  std::vector<std::uint8_t> table(std::size_t{1} << vars.size());
  for (std::size_t row = 0; row < table.size(); ++row) {
    std::size_t own = 0;
    for (std::size_t i = 0; i < position.size(); ++i)
      if ((row >> position[i]) & 1u) own |= std::size_t{1} << i;
    table[row] = table_[own];
  }
  return {vars, std::move(table)};
}

BooleanFunction operator&(const BooleanFunction& f, const BooleanFunction& g) {
  const auto vars = merge_vars(f.vars_, g.vars_);
  const auto fe = f.extended_to(vars);
  const auto ge = g.extended_to(vars);
  std::vector<std::uint8_t> table(fe.table_.size());
  for (std::size_t row = 0; row < table.size(); ++row)
    table[row] = fe.table_[row] & ge.table_[row];
  return {vars, std::move(table)};
}

BooleanFunction operator|(const BooleanFunction& f, const BooleanFunction& g) {
  const auto vars = merge_vars(f.vars_, g.vars_);
  const auto fe = f.extended_to(vars);
  const auto ge = g.extended_to(vars);
  std::vector<std::uint8_t> table(fe.table_.size());
  for (std::size_t row = 0; row < table.size(); ++row)
    table[row] = fe.table_[row] | ge.table_[row];
  return {vars, std::move(table)};
}

BooleanFunction operator~(const BooleanFunction& f) {
  std::vector<std::uint8_t> table(f.table_.size());
  for (std::size_t row = 0; row < table.size(); ++row)
    table[row] = f.table_[row] ? 0 : 1;
  return {f.vars_, std::move(table)};
}

bool semantically_equal(const BooleanFunction& f, const BooleanFunction& g) {
  const auto vars = merge_vars(f.variables(), g.variables());
  return f.extended_to(vars) == g.extended_to(vars);
}

std::string sop_string(const BooleanFunction& f) {
  const BooleanFunction fn = f.support_restricted();
  if (fn.arity() == 0) return fn.bit(0) ? "1" : "0";

  // Implicant: `care` marks fixed bits, `bits` their values (bits ⊆ care).
  using Implicant = std::pair<std::uint32_t, std::uint32_t>;
  const std::uint32_t all_care =
      static_cast<std::uint32_t>((1u << fn.arity()) - 1u);

  std::set<Implicant> level;
  std::vector<std::uint32_t> minterms;
  for (std::size_t row = 0; row < fn.rows(); ++row)
    if (fn.bit(row)) {
      level.insert({all_care, static_cast<std::uint32_t>(row)});
      minterms.push_back(static_cast<std::uint32_t>(row));
    }
  if (minterms.empty()) return "0";

  std::set<Implicant> primes;
  while (!level.empty()) {
    std::set<Implicant> next;
    std::set<Implicant> merged;
    for (auto i = level.begin(); i != level.end(); ++i)
      for (auto j = std::next(i); j != level.end(); ++j) {
        if (i->first != j->first) continue;
        const std::uint32_t diff = i->second ^ j->second;
        if (std::popcount(diff) != 1) continue;
        next.insert({i->first & ~diff, i->second & ~diff});
        merged.insert(*i);
        merged.insert(*j);
      }
    for (const auto& imp : level)
      if (!merged.count(imp)) primes.insert(imp);
    level = std::move(next);
  }

  const auto covers = [](const Implicant& imp, std::uint32_t minterm) {
    return (minterm & imp.first) == imp.second;
  };

  // Greedy cover over primes, most-general (fewest literals) first.
  std::vector<Implicant> ordered(primes.begin(), primes.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Implicant& a, const Implicant& b) {
                     return std::popcount(a.first) < std::popcount(b.first);
                   });
  std::set<std::uint32_t> uncovered(minterms.begin(), minterms.end());
  std::vector<Implicant> chosen;
  while (!uncovered.empty()) {
    const Implicant* best = nullptr;
    std::size_t best_count = 0;
    for (const auto& imp : ordered) {
      std::size_t count = 0;
      for (auto m : uncovered)
        if (covers(imp, m)) ++count;
      if (count > best_count) {
        best = &imp;
        best_count = count;
      }
    }
    chosen.push_back(*best);
    for (auto it = uncovered.begin(); it != uncovered.end();)
      it = covers(*best, *it) ? uncovered.erase(it) : std::next(it);
  }

  std::vector<std::string> terms;
  for (const auto& imp : chosen) {
    std::string term;
    for (std::size_t i = 0; i < fn.arity(); ++i) {
      if (!((imp.first >> i) & 1u)) continue;
      if (!((imp.second >> i) & 1u)) term += "~";
      term += fn.variables()[i];
    }
    terms.push_back(term);
  }
  std::sort(terms.begin(), terms.end());
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i];
  }
  return out;
}

}  // namespace rgt
