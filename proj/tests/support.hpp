#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rgt/algebra.hpp"
#include "rgt/boolfn.hpp"
#include "rgt/influence.hpp"
#include "rgt/polynomial.hpp"

namespace rgt::test {

inline UniversePtr alpha_beta() { return make_universe({"alpha", "beta"}); }

inline Alternative alt(const UniversePtr& u, const std::string& text) {
  return parse_alternative(text, u);
}

/// Builds a truth table from an independent bit-level oracle. `vars` must
/// be sorted; the oracle receives values keyed by name.
inline BooleanFunction table_of(
    std::vector<std::string> vars,
    const std::function<bool(const std::map<std::string, bool>&)>& oracle) {
  std::vector<std::uint8_t> table(std::size_t{1} << vars.size());
  for (std::size_t row = 0; row < table.size(); ++row) {
    std::map<std::string, bool> assignment;
    for (std::size_t i = 0; i < vars.size(); ++i)
      assignment[vars[i]] = (row >> i) & 1;
    table[row] = oracle(assignment) ? 1 : 0;
  }
  return {std::move(vars), std::move(table)};
}

namespace detail {

/// All partitions of `items` into at least `min_blocks` nonempty blocks.
inline std::vector<std::vector<std::vector<std::string>>> partitions(
    const std::vector<std::string>& items) {
  std::vector<std::vector<std::vector<std::string>>> out;
  if (items.empty()) return out;
  if (items.size() == 1) {
    out.push_back({{items[0]}});
    return out;
  }
  std::vector<std::string> rest(items.begin() + 1, items.end());
  for (const auto& partial : partitions(rest)) {
    // First item joins an existing block or starts its own.
    for (std::size_t b = 0; b < partial.size(); ++b) {
      auto copy = partial;
      copy[b].insert(copy[b].begin(), items[0]);
      out.push_back(std::move(copy));
    }
    auto copy = partial;
    copy.insert(copy.begin(), {items[0]});
    out.push_back(std::move(copy));
  }
  return out;
}

inline std::vector<Polynomial> polys_over(const std::vector<std::string>& vars,
                                          bool sum_allowed,
                                          bool product_allowed) {
  std::vector<Polynomial> out;
  if (vars.size() == 1) {
    out.push_back(Polynomial::variable(vars[0]));
    return out;
  }
  for (const auto& parts : partitions(vars)) {
    if (parts.size() < 2) continue;
    // Children of a sum may not themselves be sums, and dually.
    std::vector<std::vector<Polynomial>> child_options;
    const auto expand = [&](bool child_sum_allowed, bool child_prod_allowed) {
      child_options.clear();
      for (const auto& block : parts)
        child_options.push_back(
            polys_over(block, child_sum_allowed, child_prod_allowed));
    };
    const auto emit = [&](bool make_sum) {
      std::vector<std::size_t> index(child_options.size(), 0);
      for (;;) {
        std::vector<Polynomial> children;
        for (std::size_t i = 0; i < index.size(); ++i)
          children.push_back(child_options[i][index[i]]);
        out.push_back(make_sum ? Polynomial::sum(std::move(children))
                               : Polynomial::product(std::move(children)));
        std::size_t pos = index.size();
        bool done = false;
        while (pos > 0) {
          --pos;
          if (++index[pos] < child_options[pos].size()) break;
          index[pos] = 0;
          if (pos == 0) done = true;
        }
        if (done) break;
      }
    };
    if (sum_allowed) {
      expand(false, true);
      emit(true);
    }
    if (product_allowed) {
      expand(true, false);
      emit(false);
    }
  }
  return out;
}

}  // namespace detail

/// Every normalized read-once polynomial over exactly the given variables.
/// Partition-generated duplicates are removed via structural equality.
inline std::vector<Polynomial> all_polynomials(
    const std::vector<std::string>& vars) {
  auto out = detail::polys_over(vars, true, true);
  std::set<std::string> seen;
  std::vector<Polynomial> unique;
  for (auto& p : out)
    if (seen.insert(to_string(p)).second) unique.push_back(std::move(p));
  return unique;
}

inline Strategy strategy(const UniversePtr& u,
                         std::initializer_list<std::pair<std::string, std::string>>
                             entries) {
  Strategy out;
  for (const auto& [var, text] : entries) out.insert({var, alt(u, text)});
  return out;
}

/// Strategies as tuples of alternative text, for compact expected lists.
inline std::vector<std::vector<std::string>> tuples(
    const std::vector<Strategy>& strategies) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : strategies) {
    std::vector<std::string> row;
    for (const auto& [var, value] : s) {
      (void)var;
      row.push_back(to_string(value));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace rgt::test
