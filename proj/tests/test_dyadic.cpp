#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cgt/dyadic.hpp"

using cgt::Dyadic;
using cgt::dyadic_between;

TEST_CASE("normalization") {
  CHECK(Dyadic(2, 1) == Dyadic::integer(1));
  CHECK(Dyadic(4, 3) == Dyadic(1, 1));
  CHECK(Dyadic(0, 5) == Dyadic());
  CHECK(Dyadic(6, 2).numerator() == 3);
  CHECK(Dyadic(6, 2).exponent() == 1);
}

TEST_CASE("addition") {
  CHECK(Dyadic(1, 1) + Dyadic(1, 1) == Dyadic::integer(1));  // 1/2 + 1/2 = 1
  CHECK(Dyadic(3, 2) + Dyadic(1, 2) == Dyadic::integer(1));  // 3/4 + 1/4 = 1
  CHECK(Dyadic(5, 3) + Dyadic() == Dyadic(5, 3));
  CHECK(Dyadic(1, 2) + Dyadic(1, 1) == Dyadic(3, 2));
}

TEST_CASE("negation and order") {
  CHECK(-(-Dyadic(3, 1)) == Dyadic(3, 1));
  CHECK(Dyadic(1, 2) < Dyadic(1, 1));
  CHECK(Dyadic(1, 1) < Dyadic::integer(1));
  CHECK(Dyadic(-1, 1) < Dyadic());
  CHECK(Dyadic(3, 1) == Dyadic(3, 1));
  CHECK(Dyadic(7, 3) > Dyadic(3, 2));  // 7/8 > 3/4
}

TEST_CASE("between uses the common-exponent construction") {
  CHECK(dyadic_between(Dyadic(), Dyadic::integer(1)) == Dyadic(1, 1));
  CHECK(dyadic_between(Dyadic(1, 2), Dyadic(1, 1)) == Dyadic(3, 3));  // (1+2)/2^3
  CHECK(dyadic_between(Dyadic::integer(1), Dyadic::integer(2)) == Dyadic(3, 1));
}

TEST_CASE("between is strictly between on random pairs") {
  std::mt19937_64 rng(20260824);
  for (int i = 0; i < 1000; ++i) {
    Dyadic a(static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<int>(rng() % 8));
    Dyadic b(static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<int>(rng() % 8));
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    Dyadic mid = dyadic_between(a, b);
    CHECK(a < mid);
    CHECK(mid < b);
  }
}

TEST_CASE("between is monotone in both arguments") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Dyadic a(static_cast<std::int64_t>(rng() % 201) - 100, static_cast<int>(rng() % 6));
    Dyadic b = a + Dyadic(1 + static_cast<std::int64_t>(rng() % 64), 4);
    Dyadic c = b + Dyadic(1 + static_cast<std::int64_t>(rng() % 64), 4);
    CHECK(dyadic_between(a, b) < dyadic_between(a, c));
    CHECK(dyadic_between(a, c) < dyadic_between(b, c));
  }
}

TEST_CASE("printing") {
  CHECK(Dyadic::integer(5).str() == "5");
  CHECK(Dyadic(3, 1).str() == "3/2");
  CHECK(Dyadic(-7, 3).str() == "-7/8");
  CHECK(Dyadic(2, 1).str() == "1");
}

TEST_CASE("parsing") {
  CHECK(Dyadic::parse("5") == Dyadic::integer(5));
  CHECK(Dyadic::parse("-3/2") == Dyadic(-3, 1));
  CHECK(Dyadic::parse("6/4") == Dyadic(3, 1));
  CHECK(Dyadic::parse("3/2^4") == Dyadic(3, 4));
  CHECK(!Dyadic::parse("1/3").has_value());
  CHECK(!Dyadic::parse("1/0").has_value());
  CHECK(!Dyadic::parse("x").has_value());
}
