#include <doctest.h>

#include "rgt/decision.hpp"
#include "rgt/polynomial.hpp"
#include "support.hpp"

using namespace rgt;
using rgt::test::all_polynomials;
using rgt::test::alpha_beta;
using rgt::test::alt;
using rgt::test::table_of;

namespace {

BooleanFunction fold_of(const std::string& text) {
  return fold(parse_polynomial(text)).function;
}

}  // namespace

TEST_CASE("canonicalization matches the manual algebra") {
  const BooleanFunction w = fold_of("a(b+c)");  // a(b+c) + ~a

  SUBCASE("subject b: A = 1, B = c + ~a") {
    const CanonicalEquation eq = canonicalize(w, "b");
    CHECK(eq.a.is_constant(true));
    const auto expected_b = table_of(
        {"a", "c"}, [](const auto& v) { return v.at("c") || !v.at("a"); });
    CHECK(semantically_equal(eq.b, expected_b));
  }
  SUBCASE("subject a: A = b+c, B = 1") {
    const CanonicalEquation eq = canonicalize(w, "a");
    CHECK(semantically_equal(eq.a,
                             polynomial_function(parse_polynomial("b+c"))));
    CHECK(eq.b.is_constant(true));
  }
  SUBCASE("subject a of ab+cd: A = b+cd, B = cd") {
    const CanonicalEquation eq = canonicalize(fold_of("ab+cd"), "a");
    CHECK(semantically_equal(eq.a,
                             polynomial_function(parse_polynomial("b+cd"))));
    CHECK(semantically_equal(eq.b,
                             polynomial_function(parse_polynomial("cd"))));
  }
}

TEST_CASE("degenerate equations: subject absent from W") {
  // fold(b(a+d)+c) = b+c mentions neither a nor d.
  const BooleanFunction w = fold_of("b(a+d)+c");
  const CanonicalEquation eq = canonicalize(w, "a");
  CHECK(eq.a == eq.b);
  CHECK(semantically_equal(eq.a, polynomial_function(parse_polynomial("b+c"))));

  // The equation always has exactly the one solution A = B = W(value).
  const auto u = alpha_beta();
  const DecisionOutcome outcome = forward_solve(
      eq, {{"b", alt(u, "{beta}")}, {"c", alt(u, "0")}}, u);
  REQUIRE(outcome.choices.size() == 1);
  CHECK(outcome.choices[0] == alt(u, "{beta}"));
}

TEST_CASE("forward task with the worked influence matrix") {
  const auto u = alpha_beta();
  const BooleanFunction w = fold_of("a(b+c)");

  InfluenceMatrix influences;
  influences.set("a", "b", alt(u, "{alpha}"));
  influences.set("a", "c", alt(u, "{beta}"));
  influences.set("b", "a", alt(u, "{beta}"));
  influences.set("b", "c", alt(u, "{beta}"));
  influences.set("c", "a", alt(u, "{beta}"));
  influences.set("c", "b", alt(u, "{beta}"));

  SUBCASE("subject a is frustrated") {
    const auto outcome =
        forward_solve(canonicalize(w, "a"), influences.column("a"), u);
    CHECK(outcome.frustrated());
    CHECK(outcome.a_value == alt(u, "{beta}"));
    CHECK(outcome.b_value == alt(u, "1"));
  }
  SUBCASE("subject b can choose {beta} or 1") {
    const auto outcome =
        forward_solve(canonicalize(w, "b"), influences.column("b"), u);
    REQUIRE(outcome.choices.size() == 2);
    CHECK(outcome.choices[0] == alt(u, "{beta}"));
    CHECK(outcome.choices[1] == alt(u, "1"));
  }
  SUBCASE("subject c's equation turns into c = 1") {
    const auto outcome =
        forward_solve(canonicalize(w, "c"), influences.column("c"), u);
    REQUIRE(outcome.choices.size() == 1);
    CHECK(outcome.choices[0] == alt(u, "1"));
  }
}

TEST_CASE("missing influences are an error") {
  const auto u = alpha_beta();
  const CanonicalEquation eq = canonicalize(fold_of("a(b+c)"), "a");
  CHECK_THROWS_AS(forward_solve(eq, {{"b", alt(u, "1")}}, u), Error);
}

TEST_CASE("influence matrix") {
  const auto u = alpha_beta();
  InfluenceMatrix m;
  CHECK_THROWS_AS(m.set("a", "a", alt(u, "1")), ValidationError);
  m.set("a", "b", alt(u, "{alpha}"));
  m.set("a", "c", alt(u, "{beta}"));  // one influencer, different targets
  m.set("c", "b", alt(u, "{beta}"));
  CHECK(m.get("a", "b") == alt(u, "{alpha}"));
  CHECK(m.get("a", "c") == alt(u, "{beta}"));
  CHECK_FALSE(m.get("b", "a").has_value());
  const auto column = m.column("b");
  CHECK(column.size() == 2);
  CHECK(column.at("a") == alt(u, "{alpha}"));
  CHECK(column.at("c") == alt(u, "{beta}"));
}

TEST_CASE("super-activity") {
  CHECK(is_super_active(fold_of("abc")));
  CHECK(is_super_active(fold_of("c(ab+d)")));
  CHECK_FALSE(is_super_active(fold_of("a(b+c)")));
}

TEST_CASE("Shannon identity: W = A·x + B·~x, exhaustive") {
  SUBCASE("all 256 functions of three variables") {
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int bits = 0; bits < 256; ++bits) {
      std::vector<std::uint8_t> table(8);
      for (int row = 0; row < 8; ++row)
        table[row] = (bits >> row) & 1;
      const BooleanFunction w(vars, table);
      for (const auto& subject : vars) {
        const CanonicalEquation eq = canonicalize(w, subject);
        for (int row = 0; row < 8; ++row) {
          std::map<std::string, bool> assignment;
          for (std::size_t i = 0; i < vars.size(); ++i)
            assignment[vars[i]] = (row >> i) & 1;
          const bool x = assignment[subject];
          const bool shannon = (eq.a.evaluate_bits(assignment) && x) ||
                               (eq.b.evaluate_bits(assignment) && !x);
          CHECK(shannon == w.evaluate_bits(assignment));
        }
      }
    }
  }
  SUBCASE("folded forms over four variables") {
    for (const auto& p : all_polynomials({"a", "b", "c", "d"})) {
      const BooleanFunction w = fold(p).function;
      const auto vars = p.variables();
      for (const auto& subject : vars) {
        const CanonicalEquation eq = canonicalize(w, subject);
        for (std::size_t row = 0; row < (std::size_t{1} << vars.size());
             ++row) {
          std::map<std::string, bool> assignment;
          for (std::size_t i = 0; i < vars.size(); ++i)
            assignment[vars[i]] = (row >> i) & 1;
          const bool x = assignment[subject];
          const bool shannon =
              (eq.a.extended_to(vars).evaluate_bits(assignment) && x) ||
              (eq.b.extended_to(vars).evaluate_bits(assignment) && !x);
          CHECK(shannon == w.extended_to(vars).evaluate_bits(assignment));
        }
      }
    }
  }
}

TEST_CASE("interval soundness and completeness") {
  // x solves x = Ax + B~x set-wise exactly when B ⊆ x ⊆ A.
  const auto u = alpha_beta();
  const auto all = enumerate_alternatives(u);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& x : all) {
        const Alternative rhs = (a & x) | (b & ~x);
        const bool solves = rhs == x;
        const bool in_interval = subset_of(b, x) && subset_of(x, a);
        CHECK(solves == in_interval);
      }
}

TEST_CASE("super-active groups force D = {1} under every influence") {
  const auto u = alpha_beta();
  for (const auto& p : all_polynomials({"a", "b", "c", "d"})) {
    const BooleanFunction w = fold(p).function;
    if (!is_super_active(w)) continue;
    for (const auto& subject : p.variables()) {
      const CanonicalEquation eq = canonicalize(w, subject);
      // A and B are constant 1; any assignment yields D = {1}.
      const DecisionOutcome outcome = forward_solve(eq, {}, u);
      REQUIRE(outcome.choices.size() == 1);
      CHECK(outcome.choices[0].is_full());
    }
  }
}
