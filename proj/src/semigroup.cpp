#include "ggs/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggs {

namespace {

void check_profile(const Curve& curve, const WProfile& prof) {
    if (prof.place_coeffs.empty() || static_cast<std::int64_t>(prof.place_coeffs.size()) > curve.q())
        throw std::invalid_argument("profile: need 1..q place coefficients (l < q)");
}

void check_nonnegative(const WProfile& prof) {
    for (auto v : prof.place_coeffs)
        if (v < 0) throw std::invalid_argument("profile: semigroup queries need nonnegative coordinates");
    if (prof.include_infinity && prof.inf_coeff < 0)
        throw std::invalid_argument("profile: semigroup queries need nonnegative coordinates");
}

void check_positive(const WProfile& prof) {
    for (auto v : prof.place_coeffs)
        if (v <= 0) throw std::invalid_argument("profile: pure-gap queries need strictly positive coordinates");
    if (prof.include_infinity && prof.inf_coeff <= 0)
        throw std::invalid_argument("profile: pure-gap queries need strictly positive coordinates");
}

}  // namespace

Divisor profile_divisor(const Curve& curve, const WProfile& prof) {
    check_profile(curve, prof);
    Divisor d = zero_divisor(curve);
    for (std::size_t i = 0; i < prof.place_coeffs.size(); ++i) d.p_coeffs[i] = prof.place_coeffs[i];
    d.inf_coeff = prof.include_infinity ? prof.inf_coeff : 0;
    return d;
}

std::int64_t w_scaled(const Curve& curve, const WProfile& prof, int j) {
    check_profile(curve, prof);
    if (j < 0 || j > prof.l()) throw std::invalid_argument("w_scaled: place index out of range");
    const std::int64_t q = curve.q(), m = curve.m();
    const std::int64_t mq1 = m * (q + 1);
    const std::int64_t rj = prof.place_coeffs[static_cast<std::size_t>(j)];
    const std::int64_t t = prof.include_infinity ? prof.inf_coeff : 0;

    std::int64_t ceil_part = 0;
    for (int i = 0; i <= prof.l(); ++i) {
        if (i == j) continue;
        ceil_part += ceil_div(rj - prof.place_coeffs[static_cast<std::size_t>(i)], mq1);
    }
    ceil_part += (q - 1 - prof.l()) * ceil_div(rj, mq1);
    ceil_part += q * (q - 1) * ceil_div(rj, m);
    return mq1 * ceil_part - (t + q * q * q * rj);
}

std::int64_t w_inf_scaled(const Curve& curve, const WProfile& prof) {
    check_profile(curve, prof);
    if (!prof.include_infinity) throw std::invalid_argument("w_inf_scaled: profile does not include P_inf");
    const std::int64_t q = curve.q(), m = curve.m();
    const std::int64_t mq1 = m * (q + 1);
    const std::int64_t qn3 = ipow(q, curve.n() - 3);
    const std::int64_t t = prof.inf_coeff;

    std::int64_t ceil_part = 0;
    for (int i = 1; i <= prof.l(); ++i)
        ceil_part += ceil_div(qn3 * t - prof.place_coeffs[static_cast<std::size_t>(i)], mq1);
    ceil_part += (q - 1 - prof.l()) * ceil_div(qn3 * t, mq1);
    ceil_part += q * (q - 1) * ceil_div(qn3 * t, m);
    return mq1 * (ceil_part - t) - (prof.place_coeffs[0] - qn3 * t);
}

bool w_j_nonpositive(const Curve& curve, const WProfile& prof, int j) { return w_scaled(curve, prof, j) <= 0; }

bool w_inf_nonpositive(const Curve& curve, const WProfile& prof) { return w_inf_scaled(curve, prof) <= 0; }

bool in_weierstrass(const Curve& curve, const WProfile& prof) {
    check_profile(curve, prof);
    check_nonnegative(prof);
    for (int j = 0; j <= prof.l(); ++j)
        if (w_scaled(curve, prof, j) > 0) return false;
    if (prof.include_infinity && w_inf_scaled(curve, prof) > 0) return false;
    return true;
}

bool is_pure_gap(const Curve& curve, const WProfile& prof) {
    check_profile(curve, prof);
    check_positive(prof);
    for (int j = 0; j <= prof.l(); ++j)
        if (w_scaled(curve, prof, j) <= 0) return false;
    if (prof.include_infinity && w_inf_scaled(curve, prof) <= 0) return false;
    return true;
}

namespace {

// ell differences over every place named by the profile
std::vector<std::int64_t> ell_drops(const Curve& curve, const WProfile& prof) {
    Divisor g = profile_divisor(curve, prof);
    const std::int64_t base = ell(curve, g);
    std::vector<std::int64_t> drops;
    for (std::size_t i = 0; i < prof.place_coeffs.size(); ++i) {
        Divisor minus = g;
        minus.p_coeffs[i] -= 1;
        drops.push_back(base - ell(curve, minus));
    }
    if (prof.include_infinity) {
        Divisor minus = g;
        minus.inf_coeff -= 1;
        drops.push_back(base - ell(curve, minus));
    }
    return drops;
}

}  // namespace

bool oracle_in_weierstrass(const Curve& curve, const WProfile& prof) {
    check_profile(curve, prof);
    check_nonnegative(prof);
    auto drops = ell_drops(curve, prof);
    return std::all_of(drops.begin(), drops.end(), [](std::int64_t d) { return d != 0; });
}

bool oracle_is_pure_gap(const Curve& curve, const WProfile& prof) {
    check_profile(curve, prof);
    check_positive(prof);
    auto drops = ell_drops(curve, prof);
    return std::all_of(drops.begin(), drops.end(), [](std::int64_t d) { return d == 0; });
}

std::vector<std::int64_t> gaps_at_p0(const Curve& curve) {
    const std::int64_t q = curve.q(), m = curve.m();
    const std::int64_t mq1 = m * (q + 1);
    std::vector<std::int64_t> gaps;
    // pole numbers split as k = a + m(b + (q+1)c), 0 <= a < m, 0 <= b <= q
    for (std::int64_t b = 1; b <= q - 1; ++b)
        for (std::int64_t c = 0; c <= q - 1 - b; ++c) gaps.push_back(m * (b + (q + 1) * c));
    for (std::int64_t a = 1; a < m; ++a) {
        for (std::int64_t b = 0; b <= q; ++b) {
            std::int64_t slack = floor_div(b * m - q * q * q * a, mq1);
            std::int64_t c_max = q * q - 1 - b + slack;
            for (std::int64_t c = 0; c <= c_max; ++c) gaps.push_back(a + m * (b + (q + 1) * c));
        }
    }
    std::sort(gaps.begin(), gaps.end());
    return gaps;
}

std::vector<std::vector<std::int64_t>> enumerate_pure_gaps(const Curve& curve, int l, bool include_infinity,
                                                           const std::vector<std::int64_t>& box) {
    if (l < 0 || l >= curve.q()) throw std::invalid_argument("enumerate_pure_gaps: need 0 <= l < q");
    const std::size_t dims = static_cast<std::size_t>(l + 1) + (include_infinity ? 1 : 0);
    if (box.size() != dims) throw std::invalid_argument("enumerate_pure_gaps: box size must match tuple length");
    std::int64_t volume = 1;
    for (auto b : box) {
        if (b < 1) throw std::invalid_argument("enumerate_pure_gaps: box bounds must be >= 1");
        volume *= b;
        if (volume > 10'000'000) throw std::invalid_argument("enumerate_pure_gaps: box exceeds the 10^7 guard");
    }

    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> tuple(dims, 1);
    while (true) {
        WProfile prof;
        prof.place_coeffs.assign(tuple.begin(), tuple.begin() + l + 1);
        prof.include_infinity = include_infinity;
        if (include_infinity) prof.inf_coeff = tuple.back();
        if (is_pure_gap(curve, prof)) out.push_back(tuple);
        // lexicographic odometer
        std::size_t pos = dims;
        while (pos > 0) {
            --pos;
            if (tuple[pos] < box[pos]) {
                ++tuple[pos];
                std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(pos) + 1, tuple.end(), 1);
                break;
            }
            if (pos == 0) return out;
        }
    }
}

}  // namespace ggs
