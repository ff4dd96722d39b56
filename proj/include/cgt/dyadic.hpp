#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cgt {

/// Exact dyadic rational m/2^k, kept normalized: k == 0, or m odd.
/// All arithmetic is exact; no floating point.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t numerator, int exponent);

  static Dyadic integer(std::int64_t n) { return Dyadic(n, 0); }

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  bool is_zero() const { return num_ == 0; }

  Dyadic operator+(Dyadic rhs) const;
  Dyadic operator-() const;
  Dyadic operator-(Dyadic rhs) const { return *this + (-rhs); }

  std::strong_ordering operator<=>(Dyadic rhs) const;
  bool operator==(const Dyadic& rhs) const = default;

  /// "m" for integers, otherwise "m/q" with q = 2^k in decimal.
  std::string str() const;

  /// Accepts "m", "p/q" with q a positive power of two, or "p/2^k".
  static std::optional<Dyadic> parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

/// Strictly-between construction: rewrite x and y over a common exponent k
/// as n/2^k and m'/2^k, return (n + m')/2^(k+1) normalized.
/// Requires x < y.
Dyadic dyadic_between(Dyadic x, Dyadic y);

}  // namespace cgt
