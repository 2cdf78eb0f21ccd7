#include "ggs/divisor.hpp"

#include <numeric>
#include <stdexcept>

namespace ggs {

void check_divisor(const Curve& curve, const Divisor& d) {
    const std::int64_t q = curve.q();
    if (static_cast<std::int64_t>(d.p_coeffs.size()) != q)
        throw std::invalid_argument("divisor: need exactly q coefficients for the P places");
    if (static_cast<std::int64_t>(d.q_coeffs.size()) != q * q - 1)
        throw std::invalid_argument("divisor: need exactly q^2-1 coefficients for the Q places");
}

Divisor make_divisor(const Curve& curve, std::vector<std::int64_t> p_coeffs,
                     std::vector<std::int64_t> q_coeffs, std::int64_t inf_coeff) {
    Divisor d{std::move(p_coeffs), std::move(q_coeffs), inf_coeff};
    check_divisor(curve, d);
    return d;
}

Divisor zero_divisor(const Curve& curve) {
    const std::size_t q = static_cast<std::size_t>(curve.q());
    return Divisor{std::vector<std::int64_t>(q, 0), std::vector<std::int64_t>(q * q - 1, 0), 0};
}

std::int64_t degree(const Curve& curve, const Divisor& d) {
    check_divisor(curve, d);
    std::int64_t p_sum = std::accumulate(d.p_coeffs.begin(), d.p_coeffs.end(), std::int64_t{0});
    std::int64_t q_sum = std::accumulate(d.q_coeffs.begin(), d.q_coeffs.end(), std::int64_t{0});
    return p_sum + curve.q() * q_sum + d.inf_coeff;
}

Divisor sum(const Divisor& a, const Divisor& b) {
    if (a.p_coeffs.size() != b.p_coeffs.size() || a.q_coeffs.size() != b.q_coeffs.size())
        throw std::invalid_argument("divisor: shape mismatch");
    Divisor out = a;
    for (std::size_t i = 0; i < b.p_coeffs.size(); ++i) out.p_coeffs[i] += b.p_coeffs[i];
    for (std::size_t i = 0; i < b.q_coeffs.size(); ++i) out.q_coeffs[i] += b.q_coeffs[i];
    out.inf_coeff += b.inf_coeff;
    return out;
}

}  // namespace ggs
