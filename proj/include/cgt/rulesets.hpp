#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgt/game.hpp"

namespace cgt {

/// Blue-Red Hackenbush restricted to stalks: each stalk is a bottom-to-top
/// color sequence, and removing an edge drops everything above it.
struct HackenbushString {
  std::vector<std::string> stalks;  // characters 'B' and 'R'
};

/// Toppling Dominoes row, left to right; a move topples an own-color piece
/// in either direction and removes everything on that side with it.
struct TopplingRow {
  std::string pieces;  // characters 'L' and 'R'
};

/// Text syntax "BR BB": stalks separated by single spaces, case-insensitive.
/// Throws std::invalid_argument on other characters.
HackenbushString parse_hackenbush(std::string_view text);

/// Text syntax "LRL", case-insensitive.
TopplingRow parse_toppling(std::string_view text);

std::string to_string(const HackenbushString& p);
std::string to_string(const TopplingRow& p);

Game hackenbush_to_form(const HackenbushString& p);
Game toppling_to_form(const TopplingRow& p);

}  // namespace cgt
