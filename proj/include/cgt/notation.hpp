#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/dyadic.hpp"
#include "cgt/game.hpp"

namespace cgt {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

/// Abstract syntax for the brace notation:
///   expr   := ["-"] atom (("+"|"-") atom)*
///   atom   := number | "*" | "^" | "v" | "{" list "|" list "}"
///   list   := (expr ("," expr)*)?
///   number := integer | integer "/" power-of-two
struct Expr {
  enum class Kind { Number, Star, Up, Down, Braces, Sum };
  Kind kind = Kind::Number;
  Dyadic number;                  // Number
  std::vector<Expr> left, right;  // Braces
  std::vector<Expr> terms;        // Sum
  std::vector<int> signs;         // Sum, +1 or -1 per term
};

Expr parse(std::string_view text);  // throws ParseError

/// Numbers elaborate to canonical forms; "*" to {0|0}, "^" to {0|*},
/// "v" to {*|0}; sums are fully unfolded; "-" conjugates its operand.
Game elaborate(const Expr& e);

Game parse_game(std::string_view text);

/// Deterministic brace rendering, options in structural order. Shorthand
/// substitutes recognized canonical dyadics and the atoms * ^ v; the zero
/// game always prints as "0".
std::string print_form(Game g, bool shorthand);

}  // namespace cgt
