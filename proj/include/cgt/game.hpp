#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cgt {

/// Handle to an interned, immutable literal game form. Two handles compare
/// equal iff the forms are structurally identical. id 0 is the zero game.
struct Game {
  std::uint32_t id = 0;
  friend bool operator==(Game, Game) = default;
};

struct GameHash {
  std::size_t operator()(Game g) const { return g.id * 0x9e3779b97f4a7c15ULL >> 32; }
};

Game zero_game();
Game star();  // {0|0}
Game up();    // {0|*}
Game down();  // {*|0}

/// Intern the form with the given option sets. Duplicates collapse; option
/// order is normalized, so equal argument sets always yield the same handle.
Game make_game(std::vector<Game> left, std::vector<Game> right);

std::span<const Game> left_options(Game g);
std::span<const Game> right_options(Game g);

/// Tree height: 0 for the zero game, else 1 + max over options.
int birthday(Game g);

/// Recursively swap left and right option sets.
Game conjugate(Game g);

/// Disjunctive sum, fully unfolded into a plain literal form.
Game sum(Game g, Game h);

/// All subpositions reachable by any move sequence, including g itself.
std::vector<Game> followers(Game g);

/// Deterministic structural strict order used to normalize option sets and
/// make all printing/iteration reproducible. Independent of interning order.
bool structural_less(Game a, Game b);

std::size_t interned_form_count();

}  // namespace cgt
