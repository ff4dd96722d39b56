#include "cgt/reduction.hpp"

#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <vector>

#include "cgt/order.hpp"

namespace cgt {
namespace {

class CanonMemo {
 public:
  bool lookup(Game g, Game& out) const {
    std::shared_lock lock(mutex_);
    if (g.id >= memo_.size() || !memo_[g.id]) return false;
    out = *memo_[g.id];
    return true;
  }
  void store(Game g, Game v) {
    std::unique_lock lock(mutex_);
    if (g.id >= memo_.size()) memo_.resize(g.id + 1);
    memo_[g.id] = v;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::vector<std::optional<Game>> memo_;
};

CanonMemo& canon_memo() {
  static CanonMemo memo;
  return memo;
}

// Maxima of the left option set (minima for right), ties keep the
// structurally first option. All comparisons go through the unreduced route
// so reduction never re-enters canonicalize on the game being reduced.
std::vector<Game> prune_dominated(std::span<const Game> opts, bool left_side) {
  auto dominates = [left_side](Game a, Game b) {
    return left_side ? geq_unreduced(a, b) : geq_unreduced(b, a);
  };
  std::vector<Game> kept;
  for (Game cand : opts) {
    bool drop = false;
    for (Game k : kept) {
      if (dominates(k, cand)) {
        drop = true;
        break;
      }
    }
    if (drop) continue;
    std::erase_if(kept, [&](Game k) { return dominates(cand, k); });
    kept.push_back(cand);
  }
  return kept;
}

}  // namespace

Game remove_dominated(Game g) {
  auto left = prune_dominated(left_options(g), true);
  auto right = prune_dominated(right_options(g), false);
  return make_game(std::move(left), std::move(right));
}

Game bypass_reversible(Game g) {
  std::vector<Game> left(left_options(g).begin(), left_options(g).end());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (Game lr : right_options(left[i])) {
      if (geq_unreduced(g, lr)) {  // lr <= g: left[i] reverses through lr
        std::vector<Game> nl;
        for (std::size_t j = 0; j < left.size(); ++j)
          if (j != i) nl.push_back(left[j]);
        for (Game rep : left_options(lr)) nl.push_back(rep);
        return make_game(std::move(nl),
                         {right_options(g).begin(), right_options(g).end()});
      }
    }
  }
  std::vector<Game> right(right_options(g).begin(), right_options(g).end());
  for (std::size_t i = 0; i < right.size(); ++i) {
    for (Game rl : left_options(right[i])) {
      if (geq_unreduced(rl, g)) {  // rl >= g: right[i] reverses through rl
        std::vector<Game> nr;
        for (std::size_t j = 0; j < right.size(); ++j)
          if (j != i) nr.push_back(right[j]);
        for (Game rep : right_options(rl)) nr.push_back(rep);
        return make_game({left_options(g).begin(), left_options(g).end()},
                         std::move(nr));
      }
    }
  }
  return g;
}

Game canonicalize(Game g) {
  Game cached;
  if (canon_memo().lookup(g, cached)) return cached;
  std::vector<Game> left, right;
  for (Game l : left_options(g)) left.push_back(canonicalize(l));
  for (Game r : right_options(g)) right.push_back(canonicalize(r));
  Game h = make_game(std::move(left), std::move(right));
  for (;;) {
    Game next = remove_dominated(h);
    if (next == h) next = bypass_reversible(h);
    if (next == h) break;
    h = next;
  }
  canon_memo().store(g, h);
  canon_memo().store(h, h);
  return h;
}

bool is_canonical(Game g) { return canonicalize(g) == g; }

namespace {

Game shuffled_reduce(Game g, std::mt19937_64& rng) {
  std::vector<Game> left, right;
  for (Game l : left_options(g)) left.push_back(shuffled_reduce(l, rng));
  for (Game r : right_options(g)) right.push_back(shuffled_reduce(r, rng));
  Game h = make_game(std::move(left), std::move(right));
  struct Step {
    bool left_side;
    std::size_t index;
    std::optional<Game> reverser;  // absent = domination removal
  };
  for (;;) {
    std::vector<Step> steps;
    auto scan = [&](std::span<const Game> opts, bool left_side) {
      for (std::size_t i = 0; i < opts.size(); ++i) {
        for (std::size_t j = 0; j < opts.size(); ++j) {
          if (i == j) continue;
          bool dominated = left_side ? geq_unreduced(opts[j], opts[i])
                                     : geq_unreduced(opts[i], opts[j]);
          if (dominated) {
            steps.push_back({left_side, i, std::nullopt});
            break;
          }
        }
        auto responses = left_side ? right_options(opts[i]) : left_options(opts[i]);
        for (Game resp : responses) {
          bool reverses =
              left_side ? geq_unreduced(h, resp) : geq_unreduced(resp, h);
          if (reverses) steps.push_back({left_side, i, resp});
        }
      }
    };
    scan(left_options(h), true);
    scan(right_options(h), false);
    if (steps.empty()) break;
    const Step& step = steps[rng() % steps.size()];
    std::vector<Game> nl(left_options(h).begin(), left_options(h).end());
    std::vector<Game> nr(right_options(h).begin(), right_options(h).end());
    auto& side = step.left_side ? nl : nr;
    side.erase(side.begin() + static_cast<std::ptrdiff_t>(step.index));
    if (step.reverser) {
      auto reps = step.left_side ? left_options(*step.reverser)
                                 : right_options(*step.reverser);
      side.insert(side.end(), reps.begin(), reps.end());
    }
    h = make_game(std::move(nl), std::move(nr));
  }
  return h;
}

}  // namespace

Game canonicalize_shuffled(Game g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return shuffled_reduce(g, rng);
}

}  // namespace cgt
