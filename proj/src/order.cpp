#include "cgt/order.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "cgt/reduction.hpp"

namespace cgt {
namespace {

// Per-handle tri-state memo: 0 unknown, 1 false, 2 true.
class FlagMemo {
 public:
  bool lookup(Game g, bool& out) const {
    std::shared_lock lock(mutex_);
    if (g.id >= flags_.size() || flags_[g.id] == 0) return false;
    out = flags_[g.id] == 2;
    return true;
  }
  void store(Game g, bool v) {
    std::unique_lock lock(mutex_);
    if (g.id >= flags_.size()) flags_.resize(g.id + 1, 0);
    flags_[g.id] = v ? 2 : 1;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::vector<unsigned char> flags_;
};

FlagMemo& left_wins_memo() {
  static FlagMemo memo;
  return memo;
}

FlagMemo& right_wins_memo() {
  static FlagMemo memo;
  return memo;
}

}  // namespace

bool wins_left_first(Game g) {
  bool cached;
  if (left_wins_memo().lookup(g, cached)) return cached;
  bool result = false;
  for (Game l : left_options(g)) {
    if (!wins_right_first(l)) {
      result = true;
      break;
    }
  }
  left_wins_memo().store(g, result);
  return result;
}

bool wins_right_first(Game g) {
  bool cached;
  if (right_wins_memo().lookup(g, cached)) return cached;
  bool result = false;
  for (Game r : right_options(g)) {
    if (!wins_left_first(r)) {
      result = true;
      break;
    }
  }
  right_wins_memo().store(g, result);
  return result;
}

Outcome outcome(Game g) {
  bool wl = wins_left_first(g);
  bool wr = wins_right_first(g);
  if (wl && wr) return Outcome::N;
  if (wl) return Outcome::L;
  if (wr) return Outcome::R;
  return Outcome::P;
}

bool outcome_geq(Outcome a, Outcome b) {
  if (a == b) return true;
  if (a == Outcome::L) return true;
  if (b == Outcome::R) return true;
  return false;  // N and P are incomparable
}

bool geq_unreduced(Game g, Game h) {
  return !wins_right_first(sum(g, conjugate(h)));
}

bool geq(Game g, Game h) {
  return geq_unreduced(canonicalize(g), canonicalize(h));
}

bool leq(Game g, Game h) { return geq(h, g); }

Relation relation(Game g, Game h) {
  bool ge = geq(g, h);
  bool le = geq(h, g);
  if (ge && le) return Relation::Equal;
  if (ge) return Relation::Greater;
  if (le) return Relation::Less;
  return Relation::Fuzzy;
}

bool confused_or_less(Game g, Game h) { return !geq(g, h); }

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::L: return "L";
    case Outcome::R: return "R";
    case Outcome::N: return "N";
    case Outcome::P: return "P";
  }
  return "?";
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Greater: return ">";
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Fuzzy: return "||";
  }
  return "?";
}

}  // namespace cgt
