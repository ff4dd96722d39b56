#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cgt/dyadic_forms.hpp"
#include "cgt/notation.hpp"
#include "cgt/order.hpp"
#include "cgt/reduction.hpp"

using namespace cgt;

TEST_CASE("literal integer forms") {
  CHECK(literal_integer_form(0) == zero_game());
  Game one = make_game({zero_game()}, {});
  CHECK(literal_integer_form(1) == one);
  CHECK(literal_integer_form(2) == make_game({one}, {}));
  CHECK(literal_integer_form(-1) == make_game({}, {zero_game()}));
}

TEST_CASE("integer addition carries over to forms") {
  for (int n = -5; n <= 5; ++n) {
    for (int m = -5; m <= 5; ++m) {
      Game s = sum(literal_integer_form(n), literal_integer_form(m));
      CHECK(relation(s, literal_integer_form(n + m)) == Relation::Equal);
    }
  }
}

TEST_CASE("literal dyadic forms") {
  Game half = make_game({zero_game()}, {literal_integer_form(1)});
  CHECK(literal_dyadic_form(1, 1) == half);
  CHECK(literal_dyadic_form(0, 3) == zero_game());
  CHECK(literal_dyadic_form(3, 1) == sum(half, sum(half, half)));
  // The displayed unfolding of 1/2 + 1/2 + 1/2:
  Game expected = parse_game("{ {0|1}+{0|1}, {{0|1} | 1+{0|1}} | 1+{0|1}+{0|1}, 1+{{0|1} | 1+{0|1}} }");
  CHECK(literal_dyadic_form(3, 1) == expected);
  for (int k = 1; k <= 6; ++k) {
    CHECK(relation(literal_dyadic_form(2, k), literal_dyadic_form(1, k - 1)) == Relation::Equal);
  }
}

TEST_CASE("canonical dyadic forms") {
  Game one = literal_integer_form(1);
  Game two = literal_integer_form(2);
  CHECK(canonical_dyadic_form(Dyadic(3, 1)) == make_game({one}, {two}));
  Game half = make_game({zero_game()}, {one});
  CHECK(canonical_dyadic_form(Dyadic(1, 2)) == make_game({zero_game()}, {half}));
  for (int m = -9; m <= 9; ++m) {
    for (int k = 0; k <= 4; ++k) {
      CHECK(is_canonical(canonical_dyadic_form(Dyadic(m, k))));
    }
  }
}

TEST_CASE("canonicalize of a literal form is the canonical constructor") {
  for (int m = -9; m <= 9; ++m) {
    for (int k = 0; k <= 4; ++k) {
      CHECK(canonicalize(literal_dyadic_form(m, k)) == canonical_dyadic_form(Dyadic(m, k)));
    }
  }
}

TEST_CASE("value order embeds into the game order") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    Dyadic a(static_cast<std::int64_t>(rng() % 41) - 20, static_cast<int>(rng() % 4));
    Dyadic b(static_cast<std::int64_t>(rng() % 41) - 20, static_cast<int>(rng() % 4));
    Relation rel = relation(canonical_dyadic_form(a), canonical_dyadic_form(b));
    if (a < b) CHECK(rel == Relation::Less);
    if (a == b) CHECK(rel == Relation::Equal);
    if (a > b) CHECK(rel == Relation::Greater);
  }
}

TEST_CASE("each dyadic equals its neighbour bracket") {
  for (int m = -9; m <= 9; ++m) {
    for (int k = 0; k <= 4; ++k) {
      Game lo = canonical_dyadic_form(Dyadic(m - 1, k));
      Game hi = canonical_dyadic_form(Dyadic(m + 1, k));
      Game bracket = make_game({lo}, {hi});
      CHECK(relation(bracket, canonical_dyadic_form(Dyadic(m, k))) == Relation::Equal);
    }
  }
}

TEST_CASE("a wider integer bracket still equals the left endpoint plus one") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 5; ++k) {
      Game g = make_game({literal_integer_form(n - 1)}, {literal_integer_form(n + k)});
      CHECK(relation(g, literal_integer_form(n)) == Relation::Equal);
    }
  }
}

TEST_CASE("literal membership") {
  Game half = make_game({zero_game()}, {literal_integer_form(1)});
  auto mk = is_literal_dyadic_member(half);
  REQUIRE(mk.has_value());
  CHECK(mk->first == 1);
  CHECK(mk->second == 1);
  Game three_halves_canonical = make_game({literal_integer_form(1)}, {literal_integer_form(2)});
  CHECK(!is_literal_dyadic_member(three_halves_canonical).has_value());
  CHECK(!is_literal_dyadic_member(make_game({star()}, {star()})).has_value());
  auto two_halves = is_literal_dyadic_member(literal_dyadic_form(2, 1));
  REQUIRE(two_halves.has_value());
  CHECK(two_halves->first == 2);
  CHECK(two_halves->second == 1);
}

TEST_CASE("canonical membership") {
  Game three_halves = make_game({literal_integer_form(1)}, {literal_integer_form(2)});
  auto v = is_canonical_dyadic_member(three_halves);
  REQUIRE(v.has_value());
  CHECK(*v == Dyadic(3, 1));
  CHECK(!is_canonical_dyadic_member(literal_dyadic_form(2, 1)).has_value());
  CHECK(is_canonical_dyadic_member(zero_game()) == Dyadic());
  for (int m = -9; m <= 9; ++m) {
    for (int k = 0; k <= 4; ++k) {
      Dyadic x(m, k);
      CHECK(is_canonical_dyadic_member(canonical_dyadic_form(x)) == x);
    }
  }
}
