// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
// its wall time; the binary exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ggs/codes.hpp"
#include "ggs/floors.hpp"
#include "ggs/io.hpp"
#include "ggs/semigroup.hpp"

using namespace ggs;

namespace {

struct Harness {
    int failures = 0;
    int index = 0;

    void run(const std::string& name, const std::function<bool()>& body) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(), secs,
                    error.empty() ? "" : " error: ", error.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

Divisor div23(const Curve& c, std::int64_t r0, std::int64_t r1, std::int64_t t) {
    return make_divisor(c, {r0, r1}, {0, 0, 0}, t);
}

}  // namespace

int main() {
    Harness h;

    const Curve gk = Curve::make(Field::make(2, 1, 3));
    const Curve c25 = Curve::make(Field::make(2, 1, 5));

    h.run("rational-place counts match the closed formula for (2,3), (2,5), (3,3)", [&] {
        const std::array<std::tuple<int, int, std::int64_t>, 3> cases = {
            std::tuple<int, int, std::int64_t>{2, 3, 225}, {2, 5, 3969}, {3, 3, 6076}};
        for (auto [p, n, expect] : cases) {
            Curve curve = Curve::make(Field::make(p, 1, n));
            if (curve.total_places() != expect) return false;
            if (static_cast<std::int64_t>(curve.enumerate_affine().size()) + 1 != expect) return false;
        }
        return true;
    });

    h.run("lattice cardinality formula on 200 random divisors at (2,3)", [&] {
        std::mt19937_64 rng(1001);
        for (int trial = 0; trial < 200; ++trial) {
            Divisor d = zero_divisor(gk);
            std::int64_t w = 1 << 20;
            for (auto& v : d.p_coeffs) {
                v = static_cast<std::int64_t>(rng() % 25) - 6;
                w = std::min(w, v);
            }
            for (auto& v : d.q_coeffs) {
                v = static_cast<std::int64_t>(rng() % 25) - 6;
                w = std::min(w, v);
            }
            d.inf_coeff = 2 * gk.genus() - 1 - 8 * w + static_cast<std::int64_t>(rng() % 51);
            std::int64_t expect = 1 - gk.genus() + d.inf_coeff +
                                  std::accumulate(d.p_coeffs.begin(), d.p_coeffs.end(), std::int64_t{0}) +
                                  2 * std::accumulate(d.q_coeffs.begin(), d.q_coeffs.end(), std::int64_t{0});
            if (ell(gk, d) != expect) return false;
        }
        return true;
    });

    h.run("evaluation-matrix rank equals the lattice count for 50 random divisors", [&] {
        std::mt19937_64 rng(1002);
        int checked = 0;
        while (checked < 50) {
            Divisor d = zero_divisor(gk);
            for (auto& v : d.p_coeffs) v = static_cast<std::int64_t>(rng() % 14) - 3;
            for (auto& v : d.q_coeffs) v = static_cast<std::int64_t>(rng() % 20) - 3;
            d.inf_coeff = static_cast<std::int64_t>(rng() % 90) - 3;
            std::int64_t deg = degree(gk, d);
            if (deg < 0 || deg >= 216) continue;
            auto basis = omega_set(gk, d);
            if (rank(gk.field(), evaluation_matrix(gk, basis)) != static_cast<std::int64_t>(basis.size()))
                return false;
            ++checked;
        }
        return true;
    });

    h.run("floor of 3P0+4P1+11Pinf and its nine exponent tuples", [&] {
        Divisor hdiv = div23(gk, 3, 4, 11);
        if (!(floor_divisor(gk, hdiv) == div23(gk, 3, 3, 11))) return false;
        auto basis = omega_set(gk, hdiv);
        const std::vector<std::array<std::int64_t, 6>> expected = {
            {3, 3, 0, 0, 0, -6}, {2, 2, -1, -1, -1, 2},  {1, 1, -2, -2, -2, 10},
            {0, 0, 0, 0, 0, 0},  {-1, -1, -1, -1, -1, 8}, {-3, -3, 0, 0, 0, 6},
            {-6, 3, 0, 0, 0, 3}, {-7, 2, -1, -1, -1, 11}, {-9, 0, 0, 0, 0, 9},
        };
        if (basis.size() != expected.size()) return false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto& lp = basis[i];
            std::array<std::int64_t, 6> got = {-lp.z_exp,
                                               -lp.z_exp - 9 * lp.x_exps[0],
                                               -lp.z_exp - 3 * lp.y_exps[0],
                                               -lp.z_exp - 3 * lp.y_exps[1],
                                               -lp.z_exp - 3 * lp.y_exps[2],
                                               pole_order_at_infinity(gk, lp)};
            if (got != expected[i]) return false;
        }
        return true;
    });

    h.run("[216,190,>=18] record code: dimension two ways, bound, 1e5 sampled weights", [&] {
        Divisor hdiv = div23(gk, 3, 4, 11);
        Divisor g = div23(gk, 6, 7, 22);
        LinearCode code = with_floor_bound(gk, build_differential_code(gk, g), hdiv);
        if (code.length != 216) return false;
        if (code.dimension != 190) return false;
        if (code.dimension != 216 + gk.genus() - 1 - degree(gk, g)) return false;
        if (rank(gk.field(), code.generator) != 190) return false;
        if (code.d_lower != 18 || code.d_lower_kind != BoundKind::Floor) return false;
        std::int64_t w = sample_weights(gk.field(), code, 100000, 20240901);  // throws below 18
        return w >= 18;
    });

    h.run("nine-divisor family [216, 212-2a-2b, >= 2a+2b-4] with duality", [&] {
        for (std::int64_t a = 4; a <= 6; ++a) {
            for (std::int64_t b = 4; b <= 6; ++b) {
                Divisor hdiv = div23(gk, a, b, 7);
                if (!(floor_divisor(gk, hdiv) == div23(gk, a, b, 6))) return false;
                Divisor g = div23(gk, 2 * a, 2 * b, 13);
                LinearCode om = with_floor_bound(gk, build_differential_code(gk, g), hdiv);
                if (om.dimension != 212 - 2 * a - 2 * b) return false;
                if (om.d_lower != 2 * a + 2 * b - 4) return false;
                LinearCode cl = build_evaluation_code(gk, g);
                if (!verify_duality(gk.field(), cl, om)) return false;
            }
        }
        return true;
    });

    h.run("dual constant resolution: A=26 verifies, A=8 fails", [&] {
        if (dual_constant_a(gk, DualConstant::Corrected) != 26) return false;
        if (dual_constant_a(gk, DualConstant::Uncorrected) != 8) return false;
        if (!dual_degree_identity_holds(gk, DualConstant::Corrected)) return false;
        if (dual_degree_identity_holds(gk, DualConstant::Uncorrected)) return false;
        Divisor g = div23(gk, 6, 7, 22);
        LinearCode cl = build_evaluation_code(gk, g);
        LinearCode good = build_differential_code(gk, g, 1, DualConstant::Corrected);
        LinearCode bad = build_differential_code(gk, g, 1, DualConstant::Uncorrected);
        return verify_duality(gk.field(), cl, good) && !verify_duality(gk.field(), cl, bad);
    });

    h.run("(57,j,3) pure gaps at (2,5) and [3960,3884] by counting", [&] {
        for (std::int64_t j = 1; j <= 3; ++j) {
            WProfile prof{{57, j}, 3, true};
            if (!is_pure_gap(c25, prof)) return false;
            if (!oracle_is_pure_gap(c25, prof)) return false;
        }
        PureGapBound pgb = pure_gap_distance_bound(c25, {57, 1, 3}, {57, 3, 3}, true);
        Divisor g = make_divisor(c25, {113, 3}, {0, 0, 0}, 5);
        if (!(pgb.divisor == g) || pgb.bound != 36) return false;
        if (c25.num_eval_points() != 3960) return false;
        std::int64_t lg = ell(c25, g);
        if (lg != 76) return false;
        std::int64_t k = 3960 - lg;
        return k == 3884 && k == 3960 + c25.genus() - 1 - degree(c25, g);
    });

    h.run("criteria match the dimension oracle on [0,60]^2 and [0,40]^2 x [0,40]", [&] {
        for (std::int64_t r0 = 0; r0 <= 60; ++r0) {
            for (std::int64_t r1 = 0; r1 <= 60; ++r1) {
                WProfile p{{r0, r1}, 0, false};
                if (in_weierstrass(gk, p) != oracle_in_weierstrass(gk, p)) return false;
                if (r0 > 0 && r1 > 0 && is_pure_gap(gk, p) != oracle_is_pure_gap(gk, p)) return false;
            }
        }
        for (std::int64_t r0 = 0; r0 <= 40; ++r0) {
            for (std::int64_t r1 = 0; r1 <= 40; ++r1) {
                for (std::int64_t t = 0; t <= 40; ++t) {
                    WProfile p{{r0, r1}, t, true};
                    if (in_weierstrass(gk, p) != oracle_in_weierstrass(gk, p)) return false;
                }
            }
        }
        return true;
    });

    h.run("gap sets at P0 and Pinf both have size g = 10 with the expected P0 list", [&] {
        const std::vector<std::int64_t> expected = {1, 2, 3, 4, 5, 7, 10, 11, 13, 19};
        auto gaps = gaps_at_p0(gk);
        if (gaps != expected) return false;
        // dimension-jump enumeration must agree
        std::vector<std::int64_t> jumps;
        std::int64_t prev = 1;
        for (std::int64_t k = 1; k <= 2 * gk.genus(); ++k) {
            std::int64_t cur = ell(gk, div23(gk, k, 0, 0));
            if (cur == prev) jumps.push_back(k);
            prev = cur;
        }
        if (jumps != expected) return false;
        auto inf_gaps = numerical_semigroup_gaps({8, 6, 9});
        return static_cast<std::int64_t>(gaps.size()) == gk.genus() &&
               static_cast<std::int64_t>(inf_gaps.gaps.size()) == gk.genus();
    });

    if (h.failures == 0)
        std::printf("acceptance: all %d criteria passed\n", h.index);
    else
        std::printf("acceptance: %d of %d criteria FAILED\n", h.failures, h.index);
    return h.failures == 0 ? 0 : 1;
}
