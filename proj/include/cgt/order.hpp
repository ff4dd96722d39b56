#pragma once

#include <string>

#include "cgt/game.hpp"

namespace cgt {

/// Outcome classes under the normal play convention.
enum class Outcome { L, R, N, P };

/// Result of comparing two games under the game order.
enum class Relation { Greater, Less, Equal, Fuzzy };

/// Partial order of the outcome diamond: L > N > R, L > P > R, N || P.
bool outcome_geq(Outcome a, Outcome b);

/// "Left moving first wins" / "Right moving first wins" (Zermelo, memoized).
bool wins_left_first(Game g);
bool wins_right_first(Game g);

Outcome outcome(Game g);

/// G >= H, decided by the sign test: Right moving first loses G - H.
/// Canonicalizes both arguments before playing out the difference.
bool geq(Game g, Game h);
bool leq(Game g, Game h);

/// Same test without the canonicalization step; used inside reduction and by
/// the tests that check agreement between the two routes.
bool geq_unreduced(Game g, Game h);

Relation relation(Game g, Game h);

/// The "less than or fuzzy" relation: !(g >= h).
bool confused_or_less(Game g, Game h);

std::string to_string(Outcome o);
std::string to_string(Relation r);

}  // namespace cgt
