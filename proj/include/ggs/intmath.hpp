#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ggs {

/// Exact ceiling of a/b for b > 0 and any sign of a.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return a > 0 ? (a + b - 1) / b : -((-a) / b);
}

/// Exact floor of a/b for b > 0 and any sign of a.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

/// base^exp for exp >= 0; throws on signed overflow.
std::int64_t ipow(std::int64_t base, int exp);

bool is_prime(std::int64_t v);

/// Distinct prime factors of v >= 1, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t v);

}  // namespace ggs
