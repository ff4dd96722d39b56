#include "cgt/game.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace cgt {
namespace {

struct Node {
  std::vector<Game> left;
  std::vector<Game> right;
  int birthday = 0;
};

struct KeyHash {
  std::size_t operator()(const std::pair<std::vector<Game>, std::vector<Game>>& k) const {
    std::size_t h = 0x811c9dc5;
    auto mix = [&h](std::uint32_t v) { h = (h ^ v) * 0x01000193u; };
    for (Game g : k.first) mix(g.id);
    mix(0xffffffffu);
    for (Game g : k.second) mix(g.id);
    return h;
  }
};

// Single global intern table; nodes are immutable once created and the deque
// keeps them address-stable, so lookups only need the lock briefly.
class Arena {
 public:
  static Arena& instance() {
    static Arena arena;
    return arena;
  }

  Arena() { intern({}, {}); }  // id 0 = zero game

  Game intern(std::vector<Game> left, std::vector<Game> right) {
    auto key = std::make_pair(std::move(left), std::move(right));
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    Node node;
    node.left = key.first;
    node.right = key.second;
    for (Game g : node.left) node.birthday = std::max(node.birthday, nodes_[g.id].birthday + 1);
    for (Game g : node.right) node.birthday = std::max(node.birthday, nodes_[g.id].birthday + 1);
    Game handle{static_cast<std::uint32_t>(nodes_.size())};
    nodes_.push_back(std::move(node));
    table_.emplace(std::move(key), handle);
    return handle;
  }

  const Node& node(Game g) const {
    std::shared_lock lock(mutex_);
    return nodes_[g.id];
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return nodes_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<Node> nodes_;
  std::unordered_map<std::pair<std::vector<Game>, std::vector<Game>>, Game, KeyHash> table_;
};

// Pair-keyed memo with the usual lock-around-map, compute-outside pattern.
class PairMemo {
 public:
  bool lookup(Game a, Game b, Game& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key(a, b));
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void store(Game a, Game b, Game v) {
    std::unique_lock lock(mutex_);
    map_.emplace(key(a, b), v);
  }

 private:
  static std::uint64_t key(Game a, Game b) {
    return (std::uint64_t{a.id} << 32) | b.id;
  }
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, Game> map_;
};

PairMemo& sum_memo() {
  static PairMemo memo;
  return memo;
}

PairMemo& conjugate_memo() {
  static PairMemo memo;
  return memo;
}

}  // namespace

Game zero_game() { return Game{0}; }

Game star() {
  static Game g = make_game({zero_game()}, {zero_game()});
  return g;
}

Game up() {
  static Game g = make_game({zero_game()}, {star()});
  return g;
}

Game down() {
  static Game g = make_game({star()}, {zero_game()});
  return g;
}

bool structural_less(Game a, Game b) {
  if (a == b) return false;
  int ba = birthday(a), bb = birthday(b);
  if (ba != bb) return ba < bb;
  auto lex = [](std::span<const Game> x, std::span<const Game> y) -> int {
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == y[i]) continue;
      return structural_less(x[i], y[i]) ? -1 : 1;
    }
    if (x.size() == y.size()) return 0;
    return x.size() < y.size() ? -1 : 1;
  };
  int c = lex(left_options(a), left_options(b));
  if (c != 0) return c < 0;
  return lex(right_options(a), right_options(b)) < 0;
}

Game make_game(std::vector<Game> left, std::vector<Game> right) {
  auto normalize = [](std::vector<Game>& opts) {
    std::sort(opts.begin(), opts.end(), structural_less);
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
  };
  normalize(left);
  normalize(right);
  return Arena::instance().intern(std::move(left), std::move(right));
}

std::span<const Game> left_options(Game g) { return Arena::instance().node(g).left; }

std::span<const Game> right_options(Game g) { return Arena::instance().node(g).right; }

int birthday(Game g) { return Arena::instance().node(g).birthday; }

Game conjugate(Game g) {
  if (g == zero_game()) return g;
  Game cached;
  if (conjugate_memo().lookup(g, g, cached)) return cached;
  std::vector<Game> left, right;
  for (Game r : right_options(g)) left.push_back(conjugate(r));
  for (Game l : left_options(g)) right.push_back(conjugate(l));
  Game result = make_game(std::move(left), std::move(right));
  conjugate_memo().store(g, g, result);
  return result;
}

Game sum(Game g, Game h) {
  if (g == zero_game()) return h;
  if (h == zero_game()) return g;
  if (h.id < g.id) std::swap(g, h);  // commutative; memo one orientation
  Game cached;
  if (sum_memo().lookup(g, h, cached)) return cached;
  std::vector<Game> left, right;
  for (Game gl : left_options(g)) left.push_back(sum(gl, h));
  for (Game hl : left_options(h)) left.push_back(sum(g, hl));
  for (Game gr : right_options(g)) right.push_back(sum(gr, h));
  for (Game hr : right_options(h)) right.push_back(sum(g, hr));
  Game result = make_game(std::move(left), std::move(right));
  sum_memo().store(g, h, result);
  return result;
}

std::vector<Game> followers(Game g) {
  std::vector<Game> out;
  std::unordered_set<std::uint32_t> seen;
  std::vector<Game> stack{g};
  while (!stack.empty()) {
    Game cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur.id).second) continue;
    out.push_back(cur);
    for (Game l : left_options(cur)) stack.push_back(l);
    for (Game r : right_options(cur)) stack.push_back(r);
  }
  std::sort(out.begin(), out.end(), structural_less);
  return out;
}

std::size_t interned_form_count() { return Arena::instance().size(); }

}  // namespace cgt
