#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cgt/dyadic.hpp"
#include "cgt/game.hpp"
#include "cgt/order.hpp"

namespace cgt {

struct Classification {
  Outcome outcome = Outcome::P;
  int birthday = 0;
  bool is_number = false;
  std::optional<Dyadic> value;
  bool is_c_number = false;
  bool is_s_number = false;
  bool is_zugzwang = false;
  bool is_weak_zugzwang = false;
  bool is_dicotic = false;
  bool is_infinitesimal = false;
};

/// x is in the fitting set of g: every left option is confused with or less
/// than x, and x is confused with or less than every right option.
bool fitting_contains(Game g, Dyadic x);

/// The unique simplest element of the fitting set, or nullopt when it is
/// empty. Walks the simplicity tree outward from 0 over the integers, then
/// bisects dyadically once bracketed; emptiness is certified either by a
/// candidate failing on both sides at once or by the candidate's canonical
/// birthday exceeding birthday(g).
std::optional<Dyadic> simplest_fitting(Game g);

bool is_number(Game g);
std::optional<Dyadic> value_of(Game g);

bool is_c_number(Game g);
bool is_s_number(Game g);
bool is_zugzwang(Game g);
bool is_weak_zugzwang(Game g);
bool is_dicotic(Game g);

Dyadic left_stop(Game g);
Dyadic right_stop(Game g);
bool is_infinitesimal(Game g);

/// n = birthday(g) + 1, with -n < g < n.
int archimedean_bound(Game g);

/// Requires: x a number, g not a number, Left wins g + x moving first.
/// Returns a left option gl of g with gl + x >= 0. Throws
/// std::invalid_argument naming the violated precondition otherwise.
std::optional<Game> avoidance_witness(Game g, Game x);

/// Test universe: day 0 is {0}; day d takes one representative per distinct
/// value (its canonical form) among all forms of smaller days and builds
/// every form whose option sets are subsets of those representatives of size
/// <= max_options. Earlier days are included in the result, which is
/// deterministically ordered. Budget: day <= 3, max_options <= 2.
std::vector<Game> enumerate_forms(int day, int max_options);

/// Enumerated forms that are weak zugzwangs but not numbers.
std::vector<Game> scan_weak_zugzwangs(int day, int max_options);

/// Pairs (g, gr) with g a canonical-form positive infinitesimal and g < gr.
/// Non-canonical forms are skipped: a dominated right option sitting above
/// the game is an artifact of the junk option, not a candidate.
std::vector<std::pair<Game, Game>> scan_infinitesimal_right_gap(int day, int max_options);

Classification classify(Game g);

}  // namespace cgt
