#include "cgt/dyadic_forms.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "cgt/reduction.hpp"

namespace cgt {
namespace {

Game positive_unit(int k) {
  // 1/2^0 = {0|}, 1/2^k = {0 | 1/2^(k-1)}
  static std::vector<Game> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= k) {
    if (cache.empty()) {
      cache.push_back(make_game({zero_game()}, {}));
    } else {
      cache.push_back(make_game({zero_game()}, {cache.back()}));
    }
  }
  return cache[k];
}

}  // namespace

Game literal_integer_form(std::int64_t n) {
  if (n < 0) return conjugate(literal_integer_form(-n));
  Game g = zero_game();
  for (std::int64_t i = 0; i < n; ++i) g = make_game({g}, {});
  return g;
}

Game literal_dyadic_form(std::int64_t m, int k) {
  if (k == 0) return literal_integer_form(m);
  if (m < 0) return conjugate(literal_dyadic_form(-m, k));
  Game unit = positive_unit(k);
  Game g = zero_game();
  for (std::int64_t i = 0; i < m; ++i) g = sum(g, unit);
  return g;
}

Game canonical_dyadic_form(Dyadic x) {
  if (x.numerator() < 0) return conjugate(canonical_dyadic_form(-x));
  if (x.is_integer()) return literal_integer_form(x.numerator());
  if (x.numerator() == 1) {
    Dyadic prev(1, x.exponent() - 1);
    return make_game({zero_game()}, {canonical_dyadic_form(prev)});
  }
  Dyadic lo(x.numerator() - 1, x.exponent());
  Dyadic hi(x.numerator() + 1, x.exponent());
  return make_game({canonical_dyadic_form(lo)}, {canonical_dyadic_form(hi)});
}

std::optional<Dyadic> is_canonical_dyadic_member(Game g) {
  static std::unordered_map<std::uint32_t, std::optional<Dyadic>> memo;
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    auto it = memo.find(g.id);
    if (it != memo.end()) return it->second;
  }
  std::optional<Dyadic> result;
  auto left = left_options(g);
  auto right = right_options(g);
  if (g == zero_game()) {
    result = Dyadic();
  } else if (right.empty() && left.size() == 1) {
    auto v = is_canonical_dyadic_member(left[0]);
    if (v && v->is_integer() && v->numerator() >= 0) {
      Dyadic n = *v + Dyadic::integer(1);
      if (canonical_dyadic_form(n) == g) result = n;
    }
  } else if (left.empty() && right.size() == 1) {
    auto v = is_canonical_dyadic_member(conjugate(g));
    if (v) result = -*v;
  } else if (left.size() == 1 && right.size() == 1) {
    auto a = is_canonical_dyadic_member(left[0]);
    auto b = is_canonical_dyadic_member(right[0]);
    if (a && b && *a < *b) {
      Dyadic mid = dyadic_between(*a, *b);
      if (canonical_dyadic_form(mid) == g) result = mid;
    }
  }
  std::unique_lock lock(mutex);
  memo.emplace(g.id, result);
  return result;
}

std::optional<std::pair<std::int64_t, int>> is_literal_dyadic_member(Game g) {
  auto value = is_canonical_dyadic_member(canonicalize(g));
  if (!value) return std::nullopt;
  std::int64_t p = value->numerator();
  int q = value->exponent();
  int bound = birthday(g);
  // Literal forms' birthdays grow strictly with j, so the search is finite.
  for (int j = 0; j <= bound; ++j) {
    std::int64_t m = p << j;
    int k = q + j;
    if (literal_dyadic_form(m, k) == g) return std::make_pair(m, k);
    if (p == 0) break;  // every candidate is the zero form
  }
  return std::nullopt;
}

}  // namespace cgt
