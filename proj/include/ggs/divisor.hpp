#pragma once

#include <cstdint>
#include <vector>

#include "ggs/curve.hpp"

namespace ggs {

/// Divisor supported on the distinguished places:
///   sum_mu p_coeffs[mu] P_mu  +  sum_nu q_coeffs[nu-1] Q_nu  +  inf_coeff P_inf
/// p_coeffs has length q, q_coeffs has length q^2-1.
struct Divisor {
    std::vector<std::int64_t> p_coeffs;
    std::vector<std::int64_t> q_coeffs;
    std::int64_t inf_coeff = 0;

    bool operator==(const Divisor&) const = default;
};

/// Builds a divisor and validates the coefficient vector lengths.
Divisor make_divisor(const Curve& curve, std::vector<std::int64_t> p_coeffs,
                     std::vector<std::int64_t> q_coeffs, std::int64_t inf_coeff);

/// Zero divisor of the right shape.
Divisor zero_divisor(const Curve& curve);

/// Throws std::invalid_argument unless the coefficient lengths match the curve.
void check_divisor(const Curve& curve, const Divisor& d);

/// deg = sum p + q * sum q_coeffs + inf_coeff (the Q_nu places have degree q).
std::int64_t degree(const Curve& curve, const Divisor& d);

/// Coefficient-wise sum; shapes must agree.
Divisor sum(const Divisor& a, const Divisor& b);

}  // namespace ggs
