#include "cgt/rulesets.hpp"

#include <cctype>
#include <stdexcept>

namespace cgt {
namespace {

// Owner of edge i removes edges i and above, leaving the prefix.
Game stalk_form(std::string_view stalk) {
  if (stalk.empty()) return zero_game();
  std::vector<Game> left, right;
  for (std::size_t i = 0; i < stalk.size(); ++i) {
    Game remainder = stalk_form(stalk.substr(0, i));
    if (stalk[i] == 'B') {
      left.push_back(remainder);
    } else {
      right.push_back(remainder);
    }
  }
  return make_game(std::move(left), std::move(right));
}

Game row_form(std::string_view row) {
  if (row.empty()) return zero_game();
  std::vector<Game> left, right;
  for (std::size_t i = 0; i < row.size(); ++i) {
    auto& side = row[i] == 'L' ? left : right;
    side.push_back(row_form(row.substr(i + 1)));  // topple leftward
    side.push_back(row_form(row.substr(0, i)));   // topple rightward
  }
  return make_game(std::move(left), std::move(right));
}

}  // namespace

HackenbushString parse_hackenbush(std::string_view text) {
  HackenbushString p;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ') {
      if (!cur.empty()) p.stalks.push_back(cur);
      cur.clear();
      continue;
    }
    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (u != 'B' && u != 'R')
      throw std::invalid_argument("hackenbush: expected B or R, got '" + std::string(1, ch) + "'");
    cur.push_back(u);
  }
  if (!cur.empty()) p.stalks.push_back(cur);
  return p;
}

TopplingRow parse_toppling(std::string_view text) {
  TopplingRow p;
  for (char ch : text) {
    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (u != 'L' && u != 'R')
      throw std::invalid_argument("toppling: expected L or R, got '" + std::string(1, ch) + "'");
    p.pieces.push_back(u);
  }
  return p;
}

std::string to_string(const HackenbushString& p) {
  std::string out;
  for (const auto& s : p.stalks) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

std::string to_string(const TopplingRow& p) { return p.pieces; }

Game hackenbush_to_form(const HackenbushString& p) {
  Game g = zero_game();
  for (const auto& stalk : p.stalks) g = sum(g, stalk_form(stalk));
  return g;
}

Game toppling_to_form(const TopplingRow& p) { return row_form(p.pieces); }

}  // namespace cgt
