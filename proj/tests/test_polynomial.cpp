#include <doctest.h>

#include "rgt/polynomial.hpp"
#include "support.hpp"

using namespace rgt;
using rgt::test::all_polynomials;
using rgt::test::alpha_beta;
using rgt::test::table_of;

TEST_CASE("parsing group polynomials") {
  const Polynomial p = parse_polynomial("a(b+c)");
  CHECK(p.kind() == Polynomial::Kind::Product);
  REQUIRE(p.children().size() == 2);
  CHECK(p.children()[0] == Polynomial::variable("a"));
  CHECK(p.children()[1] ==
        Polynomial::sum({Polynomial::variable("b"), Polynomial::variable("c")}));

  const Polynomial q = parse_polynomial("b(a+d)+c");
  CHECK(q == Polynomial::sum(
                 {Polynomial::product(
                      {Polynomial::variable("b"),
                       Polynomial::sum({Polynomial::variable("a"),
                                        Polynomial::variable("d")})}),
                  Polynomial::variable("c")}));

  CHECK(parse_polynomial("ab+cd") == parse_polynomial("a*b + c*d"));
  CHECK(parse_polynomial("a (b + c)") == parse_polynomial("a(b+c)"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_polynomial("a+(b"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("   "), ParseError);
  CHECK_THROWS_AS(parse_polynomial("a+"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("a)b"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("a+a"), ValidationError);  // read-once

  try {
    parse_polynomial("a+(b");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);  // after 'b', where ')' was expected
  }
}

TEST_CASE("multi-character vocabularies") {
  const std::vector<std::string> vocab{"kid", "bot"};
  const Polynomial p = parse_polynomial("kid*bot", vocab);
  CHECK(to_string(p, false) == "bot*kid");
  CHECK(parse_polynomial(to_string(p), vocab) == p);
  CHECK_THROWS_AS(parse_polynomial("kidx", vocab), ParseError);
}

TEST_CASE("printing is canonical and re-parses to the same polynomial") {
  CHECK(to_string(parse_polynomial("a(b+c)")) == "a(b+c)");
  CHECK(to_string(parse_polynomial("c+b(d+a)")) == "b(a+d) + c");
  CHECK(to_string(parse_polynomial("c+b(d+a)"), false) == "b(a+d)+c");

  for (const auto& p : all_polynomials({"a", "b", "c", "d"})) {
    CHECK(parse_polynomial(to_string(p)) == p);
    CHECK(parse_polynomial(to_string(p, false)) == p);
  }
}

TEST_CASE("stratification") {
  SUBCASE("a(b+c) gives the two-level tree") {
    const Pst t = stratify(parse_polynomial("a(b+c)"));
    CHECK(t.poly == parse_polynomial("a(b+c)"));
    REQUIRE(t.children.size() == 2);
    CHECK(t.children[0].poly == Polynomial::variable("a"));
    CHECK(t.children[0].is_leaf());
    CHECK(t.children[1].poly == parse_polynomial("b+c"));
    REQUIRE(t.children[1].children.size() == 2);
    CHECK(t.children[1].children[0].is_leaf());
  }
  SUBCASE("an elementary polynomial is a single leaf") {
    const Pst t = stratify(Polynomial::variable("a"));
    CHECK(t.is_leaf());
  }
  SUBCASE("c(ab+d) stratifies through four levels") {
    const Pst t = stratify(parse_polynomial("c(ab+d)"));
    REQUIRE(t.children.size() == 2);
    const Pst& sum = t.children[0].is_leaf() ? t.children[1] : t.children[0];
    REQUIRE(sum.children.size() == 2);
    const Pst& product =
        sum.children[0].is_leaf() ? sum.children[1] : sum.children[0];
    REQUIRE(product.children.size() == 2);
    CHECK(product.children[0].is_leaf());
    CHECK(product.children[1].is_leaf());
  }
  SUBCASE("node polynomials reconstruct their parents") {
    for (const auto& p : all_polynomials({"a", "b", "c", "d"})) {
      const Pst t = stratify(p);
      const std::function<void(const Pst&)> walk = [&](const Pst& node) {
        if (node.is_leaf()) {
          CHECK(node.poly.kind() == Polynomial::Kind::Variable);
          return;
        }
        std::vector<Polynomial> children;
        for (const auto& child : node.children) children.push_back(child.poly);
        const Polynomial rebuilt =
            node.poly.kind() == Polynomial::Kind::Sum
                ? Polynomial::sum(std::move(children))
                : Polynomial::product(std::move(children));
        CHECK(rebuilt == node.poly);
        for (const auto& child : node.children) walk(child);
      };
      walk(t);
    }
  }
}

TEST_CASE("folding worked diagonal forms") {
  SUBCASE("a(b+c) folds to a(b+c) + ~a") {
    const FoldResult r = fold(parse_polynomial("a(b+c)"));
    CHECK(to_string(r.symbolic) == "a(b+c) + ~a");
    const auto expected = table_of({"a", "b", "c"}, [](const auto& v) {
      return (v.at("a") && (v.at("b") || v.at("c"))) || !v.at("a");
    });
    CHECK(semantically_equal(r.function, expected));
  }
  SUBCASE("ab+c folds to itself") {
    const FoldResult r = fold(parse_polynomial("ab+c"));
    CHECK(to_string(r.symbolic) == "ab + c");
    const auto expected = table_of({"a", "b", "c"}, [](const auto& v) {
      return (v.at("a") && v.at("b")) || v.at("c");
    });
    CHECK(semantically_equal(r.function, expected));
  }
  SUBCASE("b(a+d)+c simplifies to b+c") {
    const FoldResult r = fold(parse_polynomial("b(a+d)+c"));
    CHECK(r.function.variables() == std::vector<std::string>{"b", "c"});
    const auto expected = table_of(
        {"b", "c"}, [](const auto& v) { return v.at("b") || v.at("c"); });
    CHECK(r.function == expected);
    CHECK(sop_string(r.function) == "b + c");
    // The raw fold is what the derivation writes before simplification.
    CHECK(to_string(r.symbolic) == "b(a+d) + c + ~(b(a+d)+c+~b)");
  }
  SUBCASE("c(ab+d) folds to the constant 1") {
    const FoldResult r = fold(parse_polynomial("c(ab+d)"));
    CHECK(r.function.is_constant(true));
    CHECK(r.function.arity() == 0);
    CHECK(to_string(r.symbolic) == "1");
  }
}

TEST_CASE("fold symbolic form and truth table always agree") {
  for (const auto& p : all_polynomials({"a", "b", "c", "d"})) {
    const FoldResult r = fold(p);
    const auto vars = p.variables();
    for (std::size_t row = 0; row < (std::size_t{1} << vars.size()); ++row) {
      std::map<std::string, bool> assignment;
      for (std::size_t i = 0; i < vars.size(); ++i)
        assignment[vars[i]] = (row >> i) & 1;
      CHECK(r.symbolic.evaluate(assignment) ==
            r.function.extended_to(vars).evaluate_bits(assignment));
    }
  }
}

TEST_CASE("set-valued folding equals per-action-bit evaluation") {
  const auto u = alpha_beta();
  const auto all = enumerate_alternatives(u);
  for (const auto& p : all_polynomials({"a", "b", "c", "d"})) {
    const FoldResult r = fold(p);
    const auto vars = r.function.variables();
    // Every set-valued assignment of the (at most 3) support variables.
    std::vector<std::size_t> index(vars.size(), 0);
    for (;;) {
      std::map<std::string, Alternative> assignment;
      for (std::size_t i = 0; i < vars.size(); ++i)
        assignment.insert({vars[i], all[index[i]]});
      const Alternative set_result = r.function.evaluate(assignment, u);
      for (std::size_t action = 0; action < u->size(); ++action) {
        std::map<std::string, bool> bits;
        for (const auto& [var, value] : assignment)
          bits[var] = value.contains(action);
        CHECK(r.function.evaluate_bits(bits) == set_result.contains(action));
      }
      std::size_t pos = index.size();
      bool done = vars.empty();
      while (pos > 0) {
        --pos;
        if (++index[pos] < all.size()) break;
        index[pos] = 0;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
  }
}

TEST_CASE("homogeneous groups fold to 1") {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < n; ++i)
      vars.push_back(Polynomial::variable(std::string(1, char('a' + i))));
    const FoldResult alliance = fold(Polynomial::product(vars));
    const FoldResult conflict = fold(Polynomial::sum(vars));
    CHECK(alliance.function.is_constant(true));
    CHECK(conflict.function.is_constant(true));
    CHECK(to_string(alliance.symbolic) == "1");
    CHECK(to_string(conflict.symbolic) == "1");
  }
}

TEST_CASE("folding only adds terms: fold(p) ⊇ p pointwise") {
  for (const auto& p : all_polynomials({"a", "b", "c", "d"})) {
    const BooleanFunction folded = fold(p).function;
    const BooleanFunction direct = polynomial_function(p);
    const auto vars = p.variables();
    for (std::size_t row = 0; row < (std::size_t{1} << vars.size()); ++row) {
      std::map<std::string, bool> assignment;
      for (std::size_t i = 0; i < vars.size(); ++i)
        assignment[vars[i]] = (row >> i) & 1;
      if (direct.evaluate_bits(assignment))
        CHECK(folded.extended_to(vars).evaluate_bits(assignment));
    }
  }
}

TEST_CASE("semantic equality of boolean functions") {
  const BooleanFunction folded = fold(parse_polynomial("b(a+d)+c")).function;
  const BooleanFunction b_plus_c = polynomial_function(parse_polynomial("b+c"));
  CHECK(semantically_equal(folded, b_plus_c));

  const BooleanFunction w = fold(parse_polynomial("a(b+c)")).function;
  CHECK_FALSE(semantically_equal(w, BooleanFunction::constant(true)));

  CHECK(semantically_equal(w, w));
}
