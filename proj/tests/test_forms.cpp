#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "cgt/dyadic_forms.hpp"
#include "cgt/game.hpp"
#include "cgt/numbers.hpp"
#include "cgt/order.hpp"
#include "test_util.hpp"

using namespace cgt;

TEST_CASE("make_game interning") {
  Game z = make_game({}, {});
  CHECK(z == zero_game());
  CHECK(birthday(z) == 0);
  Game s = make_game({z}, {z});
  CHECK(s == star());
  CHECK(make_game({z, z}, {}) == make_game({z}, {}));  // set semantics
  CHECK(make_game({z}, {}) == make_game({z}, {}));
}

TEST_CASE("interning is insensitive to build order") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Game a = testutil::random_form(rng, 3);
    std::vector<Game> l(left_options(a).begin(), left_options(a).end());
    std::vector<Game> r(right_options(a).begin(), right_options(a).end());
    std::shuffle(l.begin(), l.end(), rng);
    std::shuffle(r.begin(), r.end(), rng);
    CHECK(make_game(l, r) == a);
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(zero_game()) == zero_game());
  Game one = make_game({zero_game()}, {});
  Game minus_one = make_game({}, {zero_game()});
  CHECK(conjugate(one) == minus_one);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    Game g = testutil::random_form(rng, 3);
    CHECK(conjugate(conjugate(g)) == g);
  }
}

TEST_CASE("sum basics") {
  Game one = make_game({zero_game()}, {});
  Game minus_one = make_game({}, {zero_game()});
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    Game g = testutil::random_form(rng, 3);
    CHECK(sum(zero_game(), g) == g);
  }
  // (1) + (-1) unfolds to {-1|1}
  CHECK(sum(one, minus_one) == make_game({minus_one}, {one}));
}

TEST_CASE("sum is associative and commutative up to identity") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Game a = testutil::random_form(rng, 2);
    Game b = testutil::random_form(rng, 2);
    Game c = testutil::random_form(rng, 2);
    CHECK(sum(sum(a, b), c) == sum(a, sum(b, c)));
    CHECK(sum(a, b) == sum(b, a));
  }
}

TEST_CASE("conjugate distributes over sum") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    Game a = testutil::random_form(rng, 2);
    Game b = testutil::random_form(rng, 2);
    CHECK(conjugate(sum(a, b)) == sum(conjugate(a), conjugate(b)));
  }
}

TEST_CASE("birthday") {
  CHECK(birthday(zero_game()) == 0);
  CHECK(birthday(star()) == 1);
  for (int k = 0; k <= 6; ++k) {
    CHECK(birthday(literal_dyadic_form(1, k)) == k + 1);
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Game a = testutil::random_form(rng, 2);
    Game b = testutil::random_form(rng, 2);
    CHECK(birthday(sum(a, b)) == birthday(a) + birthday(b));
  }
}

TEST_CASE("followers") {
  CHECK(followers(zero_game()) == std::vector<Game>{zero_game()});
  auto fs = followers(star());
  CHECK(fs.size() == 2);
  Game one = make_game({zero_game()}, {});
  Game g = make_game({zero_game()}, {one});
  auto fg = followers(g);
  CHECK(fg.size() == 3);
  CHECK(std::find(fg.begin(), fg.end(), one) != fg.end());
  CHECK(std::find(fg.begin(), fg.end(), zero_game()) != fg.end());
}

TEST_CASE("g plus its conjugate is a second-player win") {
  for (Game g : enumerate_forms(2, 2)) {
    CHECK(outcome(sum(g, conjugate(g))) == Outcome::P);
  }
}
