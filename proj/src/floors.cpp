#include "ggs/floors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ggs {

Divisor floor_divisor(const Curve& curve, const Divisor& h) {
    auto basis = omega_set(curve, h);
    if (basis.empty()) throw std::domain_error("floor: undefined when ell(H) = 0");
    const std::int64_t q = curve.q(), m = curve.m();

    Divisor out = zero_divisor(curve);
    out.p_coeffs[0] = -basis.front().z_exp;
    std::fill(out.p_coeffs.begin() + 1, out.p_coeffs.end(), std::numeric_limits<std::int64_t>::min());
    std::fill(out.q_coeffs.begin(), out.q_coeffs.end(), std::numeric_limits<std::int64_t>::min());
    out.inf_coeff = std::numeric_limits<std::int64_t>::min();

    for (const auto& lp : basis) {
        out.p_coeffs[0] = std::max(out.p_coeffs[0], -lp.z_exp);
        for (std::size_t mu = 1; mu < out.p_coeffs.size(); ++mu)
            out.p_coeffs[mu] = std::max(out.p_coeffs[mu], -lp.z_exp - m * (q + 1) * lp.x_exps[mu - 1]);
        for (std::size_t nu = 0; nu < out.q_coeffs.size(); ++nu)
            out.q_coeffs[nu] = std::max(out.q_coeffs[nu], -lp.z_exp - m * lp.y_exps[nu]);
        out.inf_coeff = std::max(out.inf_coeff, pole_order_at_infinity(curve, lp));
    }
    return out;
}

Divisor floor_via_gcd(const Curve& curve, const Divisor& h) {
    auto basis = omega_set(curve, h);
    if (basis.empty()) throw std::domain_error("floor: undefined when ell(H) = 0");

    std::vector<PlaceId> places;
    for (std::int64_t mu = 0; mu < curve.q(); ++mu) places.push_back(PlaceId::pmu(mu));
    for (std::int64_t nu = 1; nu < curve.q() * curve.q(); ++nu) places.push_back(PlaceId::qnu(nu));
    places.push_back(PlaceId::pinf());

    Divisor out = zero_divisor(curve);
    for (const auto& place : places) {
        std::int64_t vmin = std::numeric_limits<std::int64_t>::max();
        for (const auto& lp : basis) vmin = std::min(vmin, valuation(curve, lp, place));
        if (place.kind == PlaceId::Kind::Pmu)
            out.p_coeffs[static_cast<std::size_t>(place.index)] = -vmin;
        else if (place.kind == PlaceId::Kind::Qnu)
            out.q_coeffs[static_cast<std::size_t>(place.index - 1)] = -vmin;
        else
            out.inf_coeff = -vmin;
    }
    return out;
}

std::int64_t floor_distance_bound(const Curve& curve, const Divisor& h) {
    check_divisor(curve, h);
    auto nonneg = [](std::int64_t v) { return v >= 0; };
    if (!std::all_of(h.p_coeffs.begin(), h.p_coeffs.end(), nonneg) ||
        !std::all_of(h.q_coeffs.begin(), h.q_coeffs.end(), nonneg) || h.inf_coeff < 0)
        throw std::invalid_argument("floor bound: H must be effective");
    return 2 * degree(curve, h) - (2 * curve.genus() - 2);
}

}  // namespace ggs
