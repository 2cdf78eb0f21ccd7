#pragma once

#include "ggs/divisor.hpp"
#include "ggs/rrspace.hpp"

namespace ggs {

/// The floor of H: the unique minimal divisor with the same Riemann-Roch
/// space, computed from the coefficient-wise extremes of the monomial basis
/// exponents. Requires ell(H) > 0.
Divisor floor_divisor(const Curve& curve, const Divisor& h);

/// Same divisor through the spanning-set characterization: minus the
/// coefficient-wise gcd (minimum) of the basis monomial divisors, assembled
/// from per-place valuations. Cross-checks floor_divisor.
Divisor floor_via_gcd(const Curve& curve, const Divisor& h);

/// Designed minimum-distance bound 2 deg(H) - (2g - 2) for the differential
/// code built on G = H + floor(H); H must be effective.
std::int64_t floor_distance_bound(const Curve& curve, const Divisor& h);

}  // namespace ggs
