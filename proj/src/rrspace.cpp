#include "ggs/rrspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ggs {

namespace {

std::int64_t vsum(const std::vector<std::int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

}  // namespace

std::int64_t pole_order_at_infinity(const Curve& curve, const LatticePoint& lp) {
    const std::int64_t q = curve.q(), m = curve.m();
    return q * q * q * lp.z_exp + m * (q + 1) * vsum(lp.x_exps) + m * q * vsum(lp.y_exps);
}

std::int64_t valuation(const Curve& curve, const LatticePoint& lp, const PlaceId& place) {
    const std::int64_t m = curve.m(), q = curve.q();
    switch (place.kind) {
        case PlaceId::Kind::Pmu:
            if (place.index == 0) return lp.z_exp;
            return lp.z_exp + m * (q + 1) * lp.x_exps[static_cast<std::size_t>(place.index - 1)];
        case PlaceId::Kind::Qnu:
            return lp.z_exp + m * lp.y_exps[static_cast<std::size_t>(place.index - 1)];
        case PlaceId::Kind::Pinf:
            return -pole_order_at_infinity(curve, lp);
        case PlaceId::Kind::Dpoint:
            break;
    }
    throw std::invalid_argument("valuation: supported on distinguished places only");
}

std::vector<LatticePoint> omega_set(const Curve& curve, const Divisor& g) {
    check_divisor(curve, g);
    const std::int64_t q = curve.q(), m = curve.m();
    const std::int64_t mq1 = m * (q + 1);

    // pole order >= z_exp - sum_{mu>=1} p_coeffs - q * sum q_coeffs, so the
    // z exponent cannot exceed inf_coeff plus those sums
    std::int64_t hi = g.inf_coeff;
    for (std::size_t mu = 1; mu < g.p_coeffs.size(); ++mu) hi += g.p_coeffs[mu];
    hi += q * vsum(g.q_coeffs);

    std::vector<LatticePoint> out;
    for (std::int64_t i = -g.p_coeffs[0]; i <= hi; ++i) {
        LatticePoint lp;
        lp.z_exp = i;
        lp.x_exps.resize(g.p_coeffs.size() - 1);
        lp.y_exps.resize(g.q_coeffs.size());
        std::int64_t pole = q * q * q * i;
        for (std::size_t mu = 1; mu < g.p_coeffs.size(); ++mu) {
            lp.x_exps[mu - 1] = ceil_div(-i - g.p_coeffs[mu], mq1);
            pole += mq1 * lp.x_exps[mu - 1];
        }
        for (std::size_t nu = 0; nu < g.q_coeffs.size(); ++nu) {
            lp.y_exps[nu] = ceil_div(-i - g.q_coeffs[nu], m);
            pole += m * q * lp.y_exps[nu];
        }
        if (pole <= g.inf_coeff) out.push_back(std::move(lp));
    }
    return out;
}

std::int64_t ell(const Curve& curve, const Divisor& g) {
    return static_cast<std::int64_t>(omega_set(curve, g).size());
}

std::vector<RatioExponents> theta_set(const Curve& curve, const Divisor& g) {
    check_divisor(curve, g);
    const std::int64_t q = curve.q(), m = curve.m();
    const std::int64_t mq1 = m * (q + 1);
    const std::int64_t qn3 = ipow(q, curve.n() - 3);

    std::int64_t hi = vsum(g.p_coeffs) + q * vsum(g.q_coeffs);

    std::vector<RatioExponents> out;
    for (std::int64_t u = -g.inf_coeff; u <= hi; ++u) {
        RatioExponents rp;
        rp.tau_exp = u;
        rp.x_ratio_exps.resize(g.p_coeffs.size() - 1);
        rp.y_ratio_exps.resize(g.q_coeffs.size());
        std::int64_t y_sum = 0;
        for (std::size_t nu = 0; nu < g.q_coeffs.size(); ++nu) {
            rp.y_ratio_exps[nu] = ceil_div(-qn3 * u - g.q_coeffs[nu], m);
            y_sum += rp.y_ratio_exps[nu];
        }
        std::int64_t x_sum = 0;
        for (std::size_t mu = 1; mu < g.p_coeffs.size(); ++mu) {
            rp.x_ratio_exps[mu - 1] = ceil_div(m * y_sum - qn3 * u - g.p_coeffs[mu], mq1);
            x_sum += rp.x_ratio_exps[mu - 1];
        }
        std::int64_t pole_at_p0 = (mq1 - qn3) * u + mq1 * x_sum + m * y_sum;
        if (pole_at_p0 <= g.p_coeffs[0]) out.push_back(std::move(rp));
    }
    return out;
}

LatticePoint to_monomial(const Curve& curve, const RatioExponents& rp) {
    const std::int64_t q = curve.q(), m = curve.m();
    const std::int64_t mq1 = m * (q + 1);
    const std::int64_t qn3 = ipow(q, curve.n() - 3);
    const std::int64_t ls = vsum(rp.x_ratio_exps), gs = vsum(rp.y_ratio_exps);

    LatticePoint lp;
    lp.z_exp = -(mq1 - qn3) * rp.tau_exp - mq1 * ls - m * gs;
    lp.x_exps.resize(rp.x_ratio_exps.size());
    for (std::size_t mu = 0; mu < lp.x_exps.size(); ++mu)
        lp.x_exps[mu] = rp.tau_exp + ls + rp.x_ratio_exps[mu];
    lp.y_exps.resize(rp.y_ratio_exps.size());
    for (std::size_t nu = 0; nu < lp.y_exps.size(); ++nu)
        lp.y_exps[nu] = (q + 1) * (rp.tau_exp + ls) + gs + rp.y_ratio_exps[nu];
    return lp;
}

RatioExponents to_ratio(const Curve& curve, const LatticePoint& lp) {
    const std::int64_t q = curve.q(), m = curve.m();
    const std::int64_t qn3 = ipow(q, curve.n() - 3);
    const std::int64_t js = vsum(lp.x_exps), ks = vsum(lp.y_exps);

    RatioExponents rp;
    rp.tau_exp = -pole_order_at_infinity(curve, lp);
    rp.x_ratio_exps.resize(lp.x_exps.size());
    for (std::size_t mu = 0; mu < rp.x_ratio_exps.size(); ++mu)
        rp.x_ratio_exps[mu] = q * q * lp.z_exp + ipow(q, curve.n() - 1) * js + m * ks + lp.x_exps[mu];
    rp.y_ratio_exps.resize(lp.y_exps.size());
    for (std::size_t nu = 0; nu < rp.y_ratio_exps.size(); ++nu)
        rp.y_ratio_exps[nu] = (q + 1) * (lp.z_exp + qn3 * js) + ipow(q, curve.n() - 2) * ks + lp.y_exps[nu];
    return rp;
}

Field::Element evaluate(const Curve& curve, const LatticePoint& lp, std::int64_t d_index) {
    if (d_index < 0 || d_index >= curve.num_eval_points())
        throw std::out_of_range("evaluate: point index outside D");
    const Field& f = curve.field();
    const AffinePoint& pt = curve.dpoints()[static_cast<std::size_t>(d_index)];
    Field::Element acc = f.pow(pt.z, lp.z_exp);
    for (std::size_t mu = 0; mu < lp.x_exps.size(); ++mu)
        acc = f.mul(acc, f.pow(f.sub(pt.x, curve.alphas()[mu + 1]), lp.x_exps[mu]));
    for (std::size_t nu = 0; nu < lp.y_exps.size(); ++nu)
        acc = f.mul(acc, f.pow(f.sub(pt.y, curve.betas()[nu + 1]), lp.y_exps[nu]));
    return acc;
}

GFMatrix evaluation_matrix(const Curve& curve, const std::vector<LatticePoint>& basis, int threads) {
    const Field& f = curve.field();
    const std::int64_t n_points = curve.num_eval_points();
    const std::int64_t n_rows = static_cast<std::int64_t>(basis.size());
    GFMatrix out(n_rows, n_points);

    if (f.has_tables()) {
        // per-point logs of the factors z, x - alpha_mu, y - beta_nu
        const std::size_t n_x = curve.alphas().size() - 1, n_y = curve.betas().size() - 1;
        std::vector<std::int64_t> logs(static_cast<std::size_t>(n_points) * (1 + n_x + n_y));
        for (std::int64_t p = 0; p < n_points; ++p) {
            const AffinePoint& pt = curve.dpoints()[static_cast<std::size_t>(p)];
            std::int64_t* row = logs.data() + static_cast<std::size_t>(p) * (1 + n_x + n_y);
            row[0] = f.log(pt.z);
            for (std::size_t mu = 0; mu < n_x; ++mu) row[1 + mu] = f.log(f.sub(pt.x, curve.alphas()[mu + 1]));
            for (std::size_t nu = 0; nu < n_y; ++nu) row[1 + n_x + nu] = f.log(f.sub(pt.y, curve.betas()[nu + 1]));
        }
        auto work = [&](std::int64_t row_lo, std::int64_t row_hi) {
            for (std::int64_t r = row_lo; r < row_hi; ++r) {
                const LatticePoint& lp = basis[static_cast<std::size_t>(r)];
                std::uint32_t* out_row = out.row_data(r);
                for (std::int64_t p = 0; p < n_points; ++p) {
                    const std::int64_t* lrow = logs.data() + static_cast<std::size_t>(p) * (1 + n_x + n_y);
                    std::int64_t s = lrow[0] * lp.z_exp;
                    for (std::size_t mu = 0; mu < n_x; ++mu) s += lrow[1 + mu] * lp.x_exps[mu];
                    for (std::size_t nu = 0; nu < n_y; ++nu) s += lrow[1 + n_x + nu] * lp.y_exps[nu];
                    out_row[p] = f.exp(s).code;
                }
            }
        };
        if (threads <= 1 || n_rows < 2) {
            work(0, n_rows);
        } else {
            int nt = std::min<std::int64_t>(threads, n_rows);
            std::vector<std::thread> pool;
            for (int t = 0; t < nt; ++t) {
                std::int64_t lo = n_rows * t / nt, hi = n_rows * (t + 1) / nt;
                pool.emplace_back(work, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        return out;
    }

    for (std::int64_t r = 0; r < n_rows; ++r)
        for (std::int64_t p = 0; p < n_points; ++p) out.set(r, p, evaluate(curve, basis[static_cast<std::size_t>(r)], p));
    return out;
}

std::int64_t psi_count(const Curve& curve, std::int64_t t) {
    const std::int64_t q = curve.q(), m = curve.m();
    std::int64_t count = 0;
    for (std::int64_t a = 0; a < m; ++a) {
        for (std::int64_t b = 0; b <= q; ++b) {
            std::int64_t used = q * q * q * a + m * q * b;
            if (used > t) continue;
            count += (t - used) / (m * (q + 1)) + 1;
        }
    }
    return count;
}

SemigroupGaps numerical_semigroup_gaps(const std::vector<std::int64_t>& generators) {
    if (generators.empty()) throw std::invalid_argument("semigroup: need at least one generator");
    std::int64_t g = 0, min_gen = generators.front();
    for (std::int64_t a : generators) {
        if (a <= 0) throw std::invalid_argument("semigroup: generators must be positive");
        g = std::gcd(g, a);
        min_gen = std::min(min_gen, a);
    }
    if (g != 1) throw std::invalid_argument("semigroup: generators must have gcd 1");

    std::int64_t limit = 2 * (*std::max_element(generators.begin(), generators.end())) + 2;
    while (true) {
        std::vector<char> reachable(static_cast<std::size_t>(limit), 0);
        reachable[0] = 1;
        for (std::int64_t v = 1; v < limit; ++v)
            for (std::int64_t a : generators)
                if (v >= a && reachable[static_cast<std::size_t>(v - a)]) {
                    reachable[static_cast<std::size_t>(v)] = 1;
                    break;
                }
        // once min_gen consecutive values are reachable, everything above is
        std::int64_t run = 0, conductor = -1;
        for (std::int64_t v = 0; v < limit; ++v) {
            run = reachable[static_cast<std::size_t>(v)] ? run + 1 : 0;
            if (run == min_gen) {
                conductor = v - min_gen + 1;
                break;
            }
        }
        if (conductor >= 0) {
            SemigroupGaps out;
            for (std::int64_t v = 1; v < conductor; ++v)
                if (!reachable[static_cast<std::size_t>(v)]) out.gaps.push_back(v);
            return out;
        }
        limit *= 2;
    }
}

}  // namespace ggs
