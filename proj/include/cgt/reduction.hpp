#pragma once

#include <cstdint>

#include "cgt/game.hpp"

namespace cgt {

/// One domination pass: drop every left option some distinct surviving left
/// option is >= to, and dually on the right. Value-preserving.
Game remove_dominated(Game g);

/// One reversibility step: the first reversible option found (in structural
/// order) is replaced by the relevant options of its reversing position; if
/// the reversing position has none, the option is deleted outright.
/// Returns g unchanged when no option is reversible.
Game bypass_reversible(Game g);

/// Bottom-up fixpoint of domination and reversibility; the unique canonical
/// form of g's value. Memoized per handle.
Game canonicalize(Game g);

bool is_canonical(Game g);

/// Canonicalization applying the individual reduction steps in a seeded
/// random order; the result must coincide with canonicalize(g) by the
/// uniqueness of canonical forms (exercised in the test suite).
Game canonicalize_shuffled(Game g, std::uint64_t seed);

}  // namespace cgt
