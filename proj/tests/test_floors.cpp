#include <random>
#include <set>

#include "doctest.h"
#include "ggs/floors.hpp"
#include "ggs/semigroup.hpp"

using namespace ggs;

namespace {

const Curve& gk() {
    static Curve c = Curve::make(Field::make(2, 1, 3));
    return c;
}

Divisor div23(std::int64_t r0, std::int64_t r1, std::int64_t s1, std::int64_t s2, std::int64_t s3,
              std::int64_t t) {
    return make_divisor(gk(), {r0, r1}, {s1, s2, s3}, t);
}

Divisor random_effective(const Curve& c, std::mt19937_64& rng, std::int64_t hi) {
    Divisor d = zero_divisor(c);
    for (auto& v : d.p_coeffs) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi + 1));
    for (auto& v : d.q_coeffs) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi + 1));
    d.inf_coeff = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi + 1));
    return d;
}

}  // namespace

TEST_CASE("floor of the worked two-point divisor") {
    CHECK(floor_divisor(gk(), div23(3, 4, 0, 0, 0, 11)) == div23(3, 3, 0, 0, 0, 11));
    CHECK(floor_via_gcd(gk(), div23(3, 4, 0, 0, 0, 11)) == div23(3, 3, 0, 0, 0, 11));
}

TEST_CASE("floor of zero is zero") {
    CHECK(floor_divisor(gk(), zero_divisor(gk())) == zero_divisor(gk()));
}

TEST_CASE("floor of the nine-divisor family drops one from the infinity part") {
    for (std::int64_t a = 4; a <= 6; ++a)
        for (std::int64_t b = 4; b <= 6; ++b) {
            if (a + b < 9 || a + b > 12) continue;
            CHECK(floor_divisor(gk(), div23(a, b, 0, 0, 0, 7)) == div23(a, b, 0, 0, 0, 6));
        }
}

TEST_CASE("floor is undefined when the space is trivial") {
    CHECK_THROWS_AS(floor_divisor(gk(), div23(-1, 0, 0, 0, 0, 0)), std::domain_error);
    CHECK_THROWS_AS(floor_via_gcd(gk(), div23(0, 0, 0, 0, 0, -1)), std::domain_error);
}

TEST_CASE("both floor routes agree on random divisors") {
    std::mt19937_64 rng(301);
    int tested = 0;
    while (tested < 200) {
        Divisor d = zero_divisor(gk());
        for (auto& v : d.p_coeffs) v = static_cast<std::int64_t>(rng() % 25) - 4;
        for (auto& v : d.q_coeffs) v = static_cast<std::int64_t>(rng() % 25) - 4;
        d.inf_coeff = static_cast<std::int64_t>(rng() % 25) - 4;
        if (ell(gk(), d) == 0) continue;
        CHECK(floor_divisor(gk(), d) == floor_via_gcd(gk(), d));
        ++tested;
    }
}

TEST_CASE("floor at a single place stays put exactly on semigroup elements") {
    const auto& c = gk();
    auto tele = numerical_semigroup_gaps({8, 6, 9});
    std::set<std::int64_t> inf_gaps(tele.gaps.begin(), tele.gaps.end());
    std::set<std::int64_t> p0_gaps;
    for (auto v : gaps_at_p0(c)) p0_gaps.insert(v);

    for (std::int64_t k = 0; k <= 40; ++k) {
        Divisor h0 = div23(k, 0, 0, 0, 0, 0);
        CHECK((floor_divisor(c, h0) == h0) == (p0_gaps.count(k) == 0));
        Divisor hinf = div23(0, 0, 0, 0, 0, k);
        CHECK((floor_divisor(c, hinf) == hinf) == (inf_gaps.count(k) == 0));
    }
    // largest infinity coefficient with the same space below 19 is 18
    CHECK(floor_divisor(c, div23(0, 0, 0, 0, 0, 19)).inf_coeff == 18);
    CHECK(floor_divisor(c, div23(6, 0, 0, 0, 0, 0)) == div23(6, 0, 0, 0, 0, 0));
}

TEST_CASE("floor is dominated, dimension-preserving, idempotent and minimal") {
    const auto& c = gk();
    std::mt19937_64 rng(302);
    for (int trial = 0; trial < 60; ++trial) {
        Divisor h = random_effective(c, rng, 9);
        Divisor fl = floor_divisor(c, h);
        CHECK(ell(c, fl) == ell(c, h));
        CHECK(floor_divisor(c, fl) == fl);
        for (std::size_t i = 0; i < fl.p_coeffs.size(); ++i) CHECK(fl.p_coeffs[i] <= h.p_coeffs[i]);
        for (std::size_t i = 0; i < fl.q_coeffs.size(); ++i) CHECK(fl.q_coeffs[i] <= h.q_coeffs[i]);
        CHECK(fl.inf_coeff <= h.inf_coeff);

        // dropping any positive coefficient shrinks the space
        std::int64_t base = ell(c, fl);
        for (std::size_t i = 0; i < fl.p_coeffs.size(); ++i) {
            if (fl.p_coeffs[i] <= 0) continue;
            Divisor dec = fl;
            dec.p_coeffs[i] -= 1;
            CHECK(ell(c, dec) < base);
        }
        for (std::size_t i = 0; i < fl.q_coeffs.size(); ++i) {
            if (fl.q_coeffs[i] <= 0) continue;
            Divisor dec = fl;
            dec.q_coeffs[i] -= 1;
            CHECK(ell(c, dec) < base);
        }
        if (fl.inf_coeff > 0) {
            Divisor dec = fl;
            dec.inf_coeff -= 1;
            CHECK(ell(c, dec) < base);
        }
    }
}

TEST_CASE("pure gaps restated through floors") {
    const auto& c = gk();
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 150; ++trial) {
        std::int64_t r0 = 1 + static_cast<std::int64_t>(rng() % 25);
        std::int64_t r1 = 1 + static_cast<std::int64_t>(rng() % 25);
        std::int64_t t = 1 + static_cast<std::int64_t>(rng() % 25);
        Divisor g = div23(r0, r1, 0, 0, 0, t);
        Divisor g1 = div23(r0 - 1, r1 - 1, 0, 0, 0, t - 1);
        bool pure = is_pure_gap(c, WProfile{{r0, r1}, t, true});
        CHECK(pure == (floor_divisor(c, g) == floor_divisor(c, g1)));
    }
}

TEST_CASE("designed distance bound from the floor") {
    const auto& c = gk();
    CHECK(floor_distance_bound(c, div23(3, 4, 0, 0, 0, 11)) == 18);
    for (std::int64_t a = 4; a <= 6; ++a)
        for (std::int64_t b = 4; b <= 6; ++b) {
            if (a + b < 9 || a + b > 12) continue;
            CHECK(floor_distance_bound(c, div23(a, b, 0, 0, 0, 7)) == 2 * a + 2 * b - 4);
        }
    CHECK(floor_distance_bound(c, div23(0, 0, 0, 0, 0, 9)) == 0);  // deg H = g - 1
    CHECK_THROWS_AS(floor_distance_bound(c, div23(-1, 0, 0, 0, 0, 5)), std::invalid_argument);
}
