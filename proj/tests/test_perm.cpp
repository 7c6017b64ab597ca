#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "latcube/errors.hpp"
#include "latcube/perm.hpp"
#include "oracles.hpp"

using namespace latcube;

namespace {

Permutation P(const char* text, int degree) { return parse_permutation(text, degree); }

}  // namespace

TEST_CASE("compose follows the right action") {
  CHECK(P("(1 2)", 3) * P("(2 3)", 3) == P("(1 3 2)", 3));
  auto p = P("(1 2 3)(4 5)", 5);
  CHECK(p * Permutation::identity(5) == p);
  // 1->2->3, 2->3->1, 3->1->2, 4->5->4, 5->4->5 by hand.
  CHECK(p * p == P("(1 3 2)", 5));
  CHECK_THROWS_AS(compose(P("(1 2)", 2), P("(1 2)", 3)), MismatchError);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(inverse(P("(1 2 3)", 3)) == P("(1 3 2)", 3));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto p = random_permutation(8, rng);
    CHECK((p * inverse(p)).is_identity());
    CHECK((inverse(p) * p).is_identity());
  }
}

TEST_CASE("cycle decomposition in canonical order") {
  auto cycles = cycle_decomposition(P("(1 2 3)(4)(5)", 5));
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0].length() == 3);
  CHECK(cycles[1].length() == 1);
  CHECK(cycles[2].length() == 1);

  auto id = cycle_decomposition(Permutation::identity(4));
  CHECK(id.size() == 4);
  CHECK(std::all_of(id.begin(), id.end(), [](const Cycle& c) { return c.length() == 1; }));

  auto pairs = cycle_decomposition(P("(1 2)(3 4)(5 6)", 6));
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].leading() == 0);
  CHECK(pairs[1].leading() == 2);
  CHECK(pairs[2].leading() == 4);

  // Longest first even when the short cycle has the smaller leading point.
  auto mixed = cycle_decomposition(P("(1 2)(3 4 5)", 5));
  CHECK(mixed[0].points == std::vector<int>{2, 3, 4});
}

TEST_CASE("cycle equality is up to rotation") {
  CHECK(Cycle{{0, 1, 2}} == Cycle{{1, 2, 0}});
  CHECK_FALSE(Cycle{{0, 1, 2}} == Cycle{{0, 2, 1}});
  CHECK_FALSE(Cycle{{0, 1}} == Cycle{{0, 1, 2}});
}

TEST_CASE("cycle structure") {
  auto cs = cycle_structure(P("(1 2 3)(4)(5)", 5));
  REQUIRE(cs.terms().size() == 2);
  CHECK(cs.terms()[0] == CycleStructure::Term{3, 1});
  CHECK(cs.terms()[1] == CycleStructure::Term{1, 2});
  CHECK(cs.to_string() == "3.1^2");
  CHECK(cycle_structure(Permutation::identity(7)).to_string() == "1^7");
  CHECK(cycle_structure(P("(1 2)(3 4)(5 6)", 6)).to_string() == "2^3");
  CHECK(CycleStructure::parse("3.1^2") == cs);
  CHECK_THROWS_AS(CycleStructure::parse("3..1"), ParseError);
  CHECK(CycleStructure::parse("1^3") < CycleStructure::parse("2.1"));
  CHECK(CycleStructure::parse("2.1") < CycleStructure::parse("3"));
}

TEST_CASE("canonical permutation of a structure") {
  CHECK(format_permutation(canonical_permutation(CycleStructure::parse("3.2.1"))) ==
        "(1 2 3)(4 5)(6)");
  CHECK(format_permutation(canonical_permutation(CycleStructure::parse("2^3"))) ==
        "(1 2)(3 4)(5 6)");
  CHECK(canonical_permutation(CycleStructure::parse("1^4")).is_identity());
}

TEST_CASE("orbit length and fixed points") {
  auto a = P("(1 2 3)(4)(5)", 5);
  CHECK(orbit_length(a, 1) == 3);
  CHECK(orbit_length(Permutation::identity(3), 2) == 1);
  CHECK(orbit_length(P("(1 2 3 4 5)", 5), 4) == 5);
  CHECK_THROWS_AS(orbit_length(a, 5), InvalidValue);

  CHECK(fixed_points(a) == std::vector<int>{3, 4});
  CHECK(fixed_points(Permutation::identity(3)) == std::vector<int>{0, 1, 2});
  CHECK(fixed_points(P("(1 2 3 4)", 4)).empty());
}

TEST_CASE("conjugacy test and constructive conjugator") {
  CHECK(are_conjugate(P("(1 2)(3)", 3), P("(1 3)(2)", 3)));
  CHECK_FALSE(are_conjugate(P("(1 2 3)", 3), P("(1 2)(3)", 3)));
  CHECK_THROWS_AS(are_conjugate(P("(1 2)", 2), P("(1 2)", 3)), MismatchError);

  auto e = Permutation::identity(4);
  auto b0 = conjugator(e, e);
  REQUIRE(b0);
  CHECK(conjugate(e, *b0) == e);

  auto p = P("(1 2 3)(4 5)", 5);
  auto q = P("(3 4 5)(1 2)", 5);
  auto beta = conjugator(p, q);
  REQUIRE(beta);
  CHECK(inverse(*beta) * p * *beta == q);
  // Deterministic cycle pairing: 1->3, 2->4, 3->5, 4->1, 5->2.
  CHECK(*beta == Permutation({2, 3, 4, 0, 1}));

  CHECK_FALSE(conjugator(P("(1 2 3)", 3), P("(1 2)(3)", 3)));
}

TEST_CASE("parse and format") {
  auto p = P("(1 2 3)(4 5)", 6);
  CHECK(p.degree() == 6);
  CHECK(p(5) == 5);
  CHECK(parse_permutation("()", 4) == Permutation::identity(4));
  CHECK(format_permutation(parse_permutation("(2 3 1)")) == "(1 2 3)");
  CHECK(format_permutation(p) == "(1 2 3)(4 5)(6)");
  CHECK(format_permutation(p, false) == "(1 2 3)(4 5)");
  CHECK(format_permutation(Permutation::identity(3), false) == "()");
  CHECK(parse_permutation("[2,3,1,5,4]") == P("(1 2 3)(4 5)", 5));
  CHECK(parse_permutation("(1,2)(3)") == P("(1 2)", 3));

  CHECK_THROWS_AS(parse_permutation("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 5)", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("()"), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2)", 0), ParseError);
  CHECK_THROWS_AS(parse_permutation("[1,1,2]"), ParseError);
  CHECK_THROWS_AS(parse_permutation("[2,1]", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(0 1)"), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 x)"), ParseError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), InvalidValue);
}

TEST_CASE("S_1 is supported") {
  auto e = Permutation::identity(1);
  CHECK(format_permutation(e) == "(1)");
  CHECK(parse_permutation(format_permutation(e)) == e);
  CHECK(cycle_structure(e).to_string() == "1");
}

TEST_CASE("property: round trip through text") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    int n = 1 + static_cast<int>(rng() % 12);
    auto p = random_permutation(n, rng);
    CHECK(parse_permutation(format_permutation(p)) == p);
    CHECK(parse_permutation(format_permutation(p, false), n) == p);
  }
}

TEST_CASE("property: cycles multiply back to the permutation") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 500; ++t) {
    int n = 1 + static_cast<int>(rng() % 12);
    auto p = random_permutation(n, rng);
    auto cycles = cycle_decomposition(p);
    std::shuffle(cycles.begin(), cycles.end(), rng);  // disjoint cycles commute
    auto prod = Permutation::identity(n);
    int covered = 0;
    for (const auto& c : cycles) {
      prod = prod * Permutation::from_cycles(n, {c.points});
      covered += c.length();
    }
    CHECK(prod == p);
    CHECK(covered == n);
    CHECK(cycle_structure(p).degree() == n);
  }
}

TEST_CASE("property: cycle structure is a conjugacy invariant") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10000; ++t) {
    int n = 1 + static_cast<int>(rng() % 12);
    auto p = random_permutation(n, rng);
    auto r = random_permutation(n, rng);
    auto q = inverse(r) * p * r;
    REQUIRE(cycle_structure(q) == cycle_structure(p));
    REQUIRE(are_conjugate(p, q));
    auto beta = conjugator(p, q);
    REQUIRE(beta);
    REQUIRE(inverse(*beta) * p * *beta == q);
  }
}

TEST_CASE("oracle: conjugacy agrees with exhaustive search for n <= 5") {
  for (int n = 1; n <= 4; ++n) {
    auto all = all_permutations(n);
    for (const auto& p : all)
      for (const auto& q : all) {
        bool expected = oracle::conjugate_in_symmetric_group(p, q);
        REQUIRE(are_conjugate(p, q) == expected);
        auto beta = conjugator(p, q);
        REQUIRE(beta.has_value() == expected);
        if (beta) REQUIRE(inverse(*beta) * p * *beta == q);
      }
  }
  // n = 5: every p against a fixed sample of q (120 x 120 x 120 is slow-ish).
  auto all = all_permutations(5);
  for (std::size_t a = 0; a < all.size(); a += 7)
    for (const auto& q : all)
      REQUIRE(are_conjugate(all[a], q) ==
              oracle::conjugate_in_symmetric_group(all[a], q));
}

TEST_CASE("all_permutations") {
  CHECK(all_permutations(1).size() == 1);
  auto s4 = all_permutations(4);
  CHECK(s4.size() == 24);
  CHECK(std::set<Permutation>(s4.begin(), s4.end()).size() == 24);
}
