#include "ggs/intmath.hpp"

#include <limits>

namespace ggs {

std::int64_t ipow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    std::int64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::int64_t>::max() / (base < 0 ? -base : base))
            throw std::overflow_error("ipow: overflow");
        result *= base;
    }
    return result;
}

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t v) {
    if (v < 1) throw std::invalid_argument("prime_factors: v must be >= 1");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace ggs
