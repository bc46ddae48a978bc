#include <doctest.h>

#include <bit>

#include "rgt/algebra.hpp"
#include "support.hpp"

using namespace rgt;
using rgt::test::alt;
using rgt::test::alpha_beta;

TEST_CASE("universe validation") {
  CHECK_THROWS_AS(make_universe(std::vector<Action>{}), ValidationError);
  CHECK_THROWS_AS(make_universe({"a", "a"}), ValidationError);
  std::vector<Action> too_many(17, Action{"x", false});
  for (std::size_t i = 0; i < too_many.size(); ++i)
    too_many[i].name = "a" + std::to_string(i);
  CHECK_THROWS_AS(make_universe(std::move(too_many)), ValidationError);
  CHECK(make_universe({"alpha"})->size() == 1);
}

TEST_CASE("enumerate_alternatives is the full algebra in canonical order") {
  const auto u = alpha_beta();
  const auto all = enumerate_alternatives(u);
  REQUIRE(all.size() == 4);
  CHECK(all[0] == alt(u, "0"));
  CHECK(all[1] == alt(u, "{alpha}"));
  CHECK(all[2] == alt(u, "{beta}"));
  CHECK(all[3] == alt(u, "1"));

  CHECK(enumerate_alternatives(make_universe({"alpha"})).size() == 2);
  CHECK(enumerate_alternatives(make_universe({"a", "b", "g"})).size() == 8);
}

TEST_CASE("connectives") {
  const auto u = alpha_beta();
  CHECK(complement(alt(u, "{alpha}")) == alt(u, "{beta}"));
  CHECK(unite(alt(u, "{alpha}"), alt(u, "{beta}")) == alt(u, "1"));
  CHECK(intersect(alt(u, "{alpha}"), alt(u, "{beta}")) == alt(u, "0"));

  const Alternative a = alt(u, "{alpha}");
  const Alternative b = alt(u, "{beta}");
  CHECK(connective(SetConnective::Union, a, &b) == alt(u, "1"));
  CHECK(connective(SetConnective::Complement, a) == b);
  CHECK_THROWS_AS(connective(SetConnective::Complement, a, &b), Error);
  CHECK_THROWS_AS(connective(SetConnective::Union, a), Error);

  const auto other = make_universe({"x", "y"});
  CHECK_THROWS_AS(unite(a, alt(other, "{x}")), Error);
}

TEST_CASE("exponential") {
  const auto u = alpha_beta();
  CHECK(exponential(alt(u, "{alpha}"), alt(u, "1")) == alt(u, "{alpha}"));
  for (const auto& x : enumerate_alternatives(u))
    CHECK(exponential(x, x) == alt(u, "1"));
  CHECK(exponential(alt(u, "0"), alt(u, "{beta}")) == alt(u, "{alpha}"));
}

TEST_CASE("interval_members") {
  const auto u = alpha_beta();
  SUBCASE("paper interval 1 ⊇ x ⊇ {beta}") {
    const auto members = interval_members(alt(u, "1"), alt(u, "{beta}"));
    REQUIRE(members.size() == 2);
    CHECK(members[0] == alt(u, "{beta}"));
    CHECK(members[1] == alt(u, "1"));
  }
  SUBCASE("point interval") {
    const auto members = interval_members(alt(u, "{alpha}"), alt(u, "{alpha}"));
    REQUIRE(members.size() == 1);
    CHECK(members[0] == alt(u, "{alpha}"));
  }
  SUBCASE("empty when lower is not contained in upper") {
    CHECK(interval_members(alt(u, "{alpha}"), alt(u, "{beta}")).empty());
  }
}

TEST_CASE("algebra laws hold exhaustively for up to three actions") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Action> actions;
    for (std::size_t i = 0; i < n; ++i)
      actions.push_back({"a" + std::to_string(i), false});
    const auto u = make_universe(std::move(actions));
    const auto all = enumerate_alternatives(u);

    for (const auto& x : all) {
      CHECK(complement(complement(x)) == x);
      for (const auto& y : all) {
        CHECK(complement(unite(x, y)) ==
              intersect(complement(x), complement(y)));
        CHECK(complement(intersect(x, y)) ==
              unite(complement(x), complement(y)));
        CHECK(unite(x, y) == unite(y, x));
        CHECK(intersect(x, y) == intersect(y, x));
        CHECK(unite(x, intersect(x, y)) == x);
        CHECK(subset_of(x, exponential(x, y)));
        for (const auto& z : all) {
          CHECK(unite(unite(x, y), z) == unite(x, unite(y, z)));
          CHECK(intersect(intersect(x, y), z) == intersect(x, intersect(y, z)));
        }
      }
      CHECK(unite(x, x) == x);
      CHECK(intersect(x, x) == x);
    }

    // Interval size and ordering.
    for (const auto& upper : all)
      for (const auto& lower : all) {
        const auto members = interval_members(upper, lower);
        if (subset_of(lower, upper)) {
          const auto diff = upper.members() & ~lower.members();
          CHECK(members.size() == (std::size_t{1} << std::popcount(diff)));
          for (std::size_t i = 1; i < members.size(); ++i)
            CHECK(canonical_less(members[i - 1], members[i]));
          for (const auto& m : members) {
            CHECK(subset_of(lower, m));
            CHECK(subset_of(m, upper));
          }
        } else {
          CHECK(members.empty());
        }
      }
  }
}

TEST_CASE("alternative text syntax") {
  const auto u = alpha_beta();
  CHECK(alt(u, "{}") == alt(u, "0"));
  CHECK(alt(u, "{alpha,beta}") == alt(u, "1"));
  CHECK(alt(u, "{beta, alpha}") == alt(u, "1"));
  CHECK(alt(u, " { beta } ") == alt(u, "{beta}"));
  CHECK(to_string(alt(u, "{alpha,beta}")) == "1");
  CHECK(to_string(alt(u, "{}")) == "0");
  CHECK(to_string(alt(u, "{beta}")) == "{beta}");
  CHECK_THROWS_AS(alt(u, "{gamma}"), ParseError);
  CHECK_THROWS_AS(alt(u, ""), ParseError);
  CHECK_THROWS_AS(alt(u, "beta"), ParseError);

  for (const auto& x : enumerate_alternatives(u))
    CHECK(parse_alternative(to_string(x), u) == x);
}
