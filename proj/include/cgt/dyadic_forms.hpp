#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "cgt/dyadic.hpp"
#include "cgt/game.hpp"

namespace cgt {

/// (n) = {(n-1)|}, (0) = 0, negatives by conjugation.
Game literal_integer_form(std::int64_t n);

/// The |m|-fold unfolded sum of +-1/2^k unit forms, where the unit is
/// 1/2^0 = {0|} and 1/2^k = {0 | 1/2^(k-1)}. m may be even: 2/2^k is a
/// different literal form from 1/2^(k-1). m = 0 gives the empty sum 0.
Game literal_dyadic_form(std::int64_t m, int k);

/// Canonical form of a dyadic value: integers as integer forms,
/// 1/2^k = {0 | canonical 1/2^(k-1)}, odd m/2^k with |m| > 1 as
/// {canonical (m-1)/2^k | canonical (m+1)/2^k}, negatives by conjugation.
Game canonical_dyadic_form(Dyadic x);

/// Some (m, k) with g identical to literal_dyadic_form(m, k), if any.
std::optional<std::pair<std::int64_t, int>> is_literal_dyadic_member(Game g);

/// The x with g identical to canonical_dyadic_form(x), if any.
std::optional<Dyadic> is_canonical_dyadic_member(Game g);

}  // namespace cgt
