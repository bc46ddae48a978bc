#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rgt/algebra.hpp"

namespace rgt {

/// A Boolean function over named subject variables, stored as a dense
/// truth table. Variables are kept sorted lexicographically; variable i
/// supplies bit i of the row index (first variable = least significant).
///
/// Set-valued evaluation at Alternatives is elementwise: the function is
/// applied independently per action bit of the universe.
class BooleanFunction {
 public:
  static constexpr std::size_t kMaxVariables = 16;

  static BooleanFunction constant(bool value);
  static BooleanFunction variable(std::string name);
  BooleanFunction(std::vector<std::string> variables,
                  std::vector<std::uint8_t> table);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  std::size_t rows() const { return table_.size(); }
  bool bit(std::size_t row) const { return table_.at(row) != 0; }

  bool is_constant(bool value) const;
  /// Semantic dependence: true iff flipping the variable changes some row.
  bool depends_on(const std::string& var) const;

  /// Shannon cofactor; the variable is removed from the variable list.
  /// Identity when the function does not mention the variable.
  BooleanFunction cofactor(const std::string& var, bool value) const;

  /// Drops every variable the table does not actually depend on.
  BooleanFunction support_restricted() const;

  bool evaluate_bits(const std::map<std::string, bool>& assignment) const;
  Alternative evaluate(const std::map<std::string, Alternative>& assignment,
                       const UniversePtr& universe) const;

  /// Structural equality: same variable list, same table.
  bool operator==(const BooleanFunction& other) const;
  bool operator!=(const BooleanFunction& other) const {
    return !(*this == other);
  }

  friend BooleanFunction operator&(const BooleanFunction& f,
                                   const BooleanFunction& g);
  friend BooleanFunction operator|(const BooleanFunction& f,
                                   const BooleanFunction& g);
  friend BooleanFunction operator~(const BooleanFunction& f);

  /// Re-expresses the function over a superset of its variables.
  BooleanFunction extended_to(const std::vector<std::string>& vars) const;

 private:
  std::vector<std::string> vars_;
  std::vector<std::uint8_t> table_;
};

/// Equality on every single-bit assignment of the union of the two
/// variable sets.
bool semantically_equal(const BooleanFunction& f, const BooleanFunction& g);

/// Deterministic irredundant sum-of-products rendering of the table
/// (Quine–McCluskey primes, greedy cover). Display only.
std::string sop_string(const BooleanFunction& f);

}  // namespace rgt
