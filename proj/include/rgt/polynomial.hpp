#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgt/boolfn.hpp"
#include "rgt/errors.hpp"

namespace rgt {

/// A read-once polynomial over subject variables: products model alliance,
/// sums model conflict. Instances are always normalized:
///   - sums/products have at least two children,
///   - no sum directly under a sum, no product under a product,
///   - children sorted by their printed form,
///   - every variable occurs exactly once.
class Polynomial {
 public:
  enum class Kind { Variable, Sum, Product };

  static Polynomial variable(std::string name);
  static Polynomial sum(std::vector<Polynomial> children);
  static Polynomial product(std::vector<Polynomial> children);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }            // Variable only
  const std::vector<Polynomial>& children() const { return children_; }

  /// All variable names, sorted.
  std::vector<std::string> variables() const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

 private:
  Polynomial() = default;
  static Polynomial node(Kind kind, std::vector<Polynomial> children);

  Kind kind_ = Kind::Variable;
  std::string name_;
  std::vector<Polynomial> children_;
};

/// Grammar: identifiers; juxtaposition or '*' for products; '+' for sums;
/// parentheses; whitespace ignored. By default every identifier is a
/// single alphanumeric character ("ab" is the product a*b); pass an
/// explicit vocabulary for multi-character subject names (matched
/// longest-first).
Polynomial parse_polynomial(std::string_view text);
Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& vocabulary);

/// Canonical rendering. The `spaced` form separates top-level sum terms
/// with " + " (as tables in reports do); nested sums always print tight.
/// parse_polynomial(to_string(p)) == p either way.
std::string to_string(const Polynomial& p, bool spaced = true);

/// Polynomial Stratification Tree: each node carries a sub-polynomial;
/// children split it by its top-level connective down to the elementary
/// (single-variable) polynomials at the leaves.
struct Pst {
  Polynomial poly;
  std::vector<Pst> children;  // empty exactly at elementary polynomials

  bool is_leaf() const { return children.empty(); }
};

Pst stratify(const Polynomial& p);

/// Symbolic set expression used to display folding results in the form
/// the calculus writes them (e.g. "a(b+c) + ~a"). Constructors apply the
/// identities x+~x=1, x+0=x, x+1=1, x*1=x, x*0=0, ~~x=x and keep the
/// expression flattened and sorted.
class Expr {
 public:
  enum class Kind { Zero, One, Var, Not, Sum, Product };

  static Expr zero();
  static Expr one();
  static Expr var(std::string name);
  static Expr negation(Expr operand);
  static Expr sum(std::vector<Expr> operands);
  static Expr product(std::vector<Expr> operands);
  /// base^w = base + ~w (the folding step).
  static Expr exponential(const Expr& base, const Expr& w);

  static Expr from_polynomial(const Polynomial& p);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Expr>& operands() const { return operands_; }

  bool operator==(const Expr& other) const;

  bool evaluate(const std::map<std::string, bool>& assignment) const;

 private:
  Expr() = default;
  static Expr node(Kind kind, std::vector<Expr> operands);
  static Expr combine(Kind kind, std::vector<Expr> operands,
                      const Expr& absorbing, const Expr& neutral);

  Kind kind_ = Kind::Zero;
  std::string name_;
  std::vector<Expr> operands_;
};

std::string to_string(const Expr& e, bool spaced = true);

/// Folding the diagonal form of a PST. `function` is the semantic result
/// with constant variables eliminated; `symbolic` is the display form the
/// fold derivation produces.
struct FoldResult {
  BooleanFunction function;
  Expr symbolic;
};

FoldResult fold(const Pst& t);
FoldResult fold(const Polynomial& p);

/// Direct truth table of the polynomial itself (no folding).
BooleanFunction polynomial_function(const Polynomial& p);

}  // namespace rgt
