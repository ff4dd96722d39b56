#include "cgt/dyadic.hpp"

#include <cassert>
#include <charconv>
#include <stdexcept>

namespace cgt {

Dyadic::Dyadic(std::int64_t numerator, int exponent) : num_(numerator), exp_(exponent) {
  if (exponent < 0) throw std::invalid_argument("dyadic exponent must be nonnegative");
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    exp_ -= 1;
  }
  if (num_ == 0) exp_ = 0;
}

Dyadic Dyadic::operator+(Dyadic rhs) const {
  int k = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
  std::int64_t a = num_ << (k - exp_);
  std::int64_t b = rhs.num_ << (k - rhs.exp_);
  return Dyadic(a + b, k);
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering Dyadic::operator<=>(Dyadic rhs) const {
  int k = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
  __int128 a = static_cast<__int128>(num_) << (k - exp_);
  __int128 b = static_cast<__int128>(rhs.num_) << (k - rhs.exp_);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, std::int64_t& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
  };
  auto slash = text.find('/');
  std::int64_t num = 0;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
    return Dyadic::integer(num);
  }
  if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
  std::string_view den = text.substr(slash + 1);
  if (den.substr(0, 2) == "2^") {
    std::int64_t k = 0;
    if (!parse_int(den.substr(2), k) || k < 0 || k > 62) return std::nullopt;
    return Dyadic(num, static_cast<int>(k));
  }
  std::int64_t q = 0;
  if (!parse_int(den, q) || q <= 0) return std::nullopt;
  int k = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++k;
  }
  if (q != 1) return std::nullopt;  // denominator must be a power of two
  return Dyadic(num, k);
}

Dyadic dyadic_between(Dyadic x, Dyadic y) {
  assert(x < y);
  int k = x.exponent() > y.exponent() ? x.exponent() : y.exponent();
  std::int64_t n = x.numerator() << (k - x.exponent());
  std::int64_t m = y.numerator() << (k - y.exponent());
  return Dyadic(n + m, k + 1);
}

}  // namespace cgt
