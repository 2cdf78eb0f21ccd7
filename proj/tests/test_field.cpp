#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ggs/field.hpp"

using ggs::Field;

namespace {

// Trial-division irreducibility oracle: f (monic, coeffs c_0..c_{d-1}) is
// reducible iff some monic divisor of degree 1..d/2 divides it exactly.
bool reducible_by_trial_division(std::int64_t p, const std::vector<int>& coeffs) {
    const int d = static_cast<int>(coeffs.size());
    std::vector<std::int64_t> f(coeffs.begin(), coeffs.end());
    f.push_back(1);
    for (int dd = 1; dd <= d / 2; ++dd) {
        std::int64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::int64_t v = 0; v < count; ++v) {
            std::vector<std::int64_t> g(dd + 1, 0);
            std::int64_t rest = v;
            for (int i = 0; i < dd; ++i) {
                g[i] = rest % p;
                rest /= p;
            }
            g[dd] = 1;
            std::vector<std::int64_t> r = f;
            for (int i = d; i >= dd; --i) {
                std::int64_t c = r[i] % p;
                if (c == 0) continue;
                for (int j = 0; j <= dd; ++j) {
                    r[i - dd + j] = ((r[i - dd + j] - c * g[j]) % p + p) % p;
                }
            }
            bool zero = std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
            if (zero) return true;
        }
    }
    return false;
}

std::int64_t encoding_of(std::int64_t p, const std::vector<int>& coeffs) {
    std::int64_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p + coeffs[i];
    return v;
}

}  // namespace

TEST_CASE("field sizes for the supported parameter triples") {
    CHECK(Field::make(2, 1, 3).size() == 64);
    CHECK(Field::make(2, 1, 5).size() == 1024);
    CHECK(Field::make(3, 1, 3).size() == 729);
    CHECK(Field::make(2, 1, 3).degree() == 6);
}

TEST_CASE("constructor rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(4, 1, 3), std::invalid_argument);   // p not prime
    CHECK_THROWS_AS(Field::make(2, 1, 4), std::invalid_argument);   // n even
    CHECK_THROWS_AS(Field::make(2, 1, 1), std::invalid_argument);   // n too small
    CHECK_THROWS_AS(Field::make(2, 0, 3), std::invalid_argument);   // e < 1
    CHECK_THROWS_AS(Field::make(2, 1, 13), std::invalid_argument);  // 2^26 over guard
}

TEST_CASE("encode/decode positional code") {
    auto f = Field::make(2, 1, 3);
    CHECK(f.encode(f.zero()) == 0);
    CHECK(f.encode(f.one()) == 1);
    CHECK(f.encode(f.from_coeffs({0, 1, 0, 0, 0, 0})) == 2);
    for (auto x : f.enumerate()) CHECK(f.from_code(f.encode(x)) == x);
    CHECK_THROWS_AS(f.from_code(64), std::out_of_range);
    CHECK_THROWS_AS(f.from_code(-1), std::out_of_range);
    CHECK_THROWS_AS(f.from_coeffs({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(f.from_coeffs({2, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("canonical modulus is minimal, irreducible and stable") {
    for (auto [p, e, n] : {std::tuple<int, int, int>{2, 1, 3}, {2, 1, 5}, {3, 1, 3}}) {
        auto f = Field::make(p, e, n);
        auto mod = f.modulus();
        CHECK_FALSE(reducible_by_trial_division(p, mod));
        // every smaller encoding is reducible
        std::int64_t my_enc = encoding_of(p, mod);
        for (std::int64_t v = 0; v < my_enc; ++v) {
            std::vector<int> c(f.degree());
            std::int64_t rest = v;
            for (int i = 0; i < f.degree(); ++i) {
                c[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            CHECK(reducible_by_trial_division(p, c));
        }
        CHECK(Field::make(p, e, n).modulus() == mod);  // rebuild is stable
    }
    // for F_64 the sieve lands on x^6 + x + 1
    CHECK(Field::make(2, 1, 3).modulus() == std::vector<int>{1, 1, 0, 0, 0, 0});
}

TEST_CASE("field axioms and inverses in F_64") {
    auto f = Field::make(2, 1, 3);
    auto all = f.enumerate();
    CHECK(all.size() == 64);
    for (auto a : all) {
        if (a == f.zero()) continue;
        CHECK(f.mul(a, f.inv(a)) == f.one());
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = f.from_code(rng() % 64), b = f.from_code(rng() % 64), c = f.from_code(rng() % 64);
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.sub(a, a) == f.zero());
    }
}

TEST_CASE("arithmetic in characteristic 3") {
    auto f = Field::make(3, 1, 3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = f.from_code(rng() % 729), b = f.from_code(rng() % 729);
        CHECK(f.add(a, f.neg(a)) == f.zero());
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        if (b != f.zero()) CHECK(f.mul(f.div(a, b), b) == a);
        // characteristic: a + a + a = 0
        CHECK(f.add(f.add(a, a), a) == f.zero());
    }
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
    CHECK_THROWS_AS(f.div(f.one(), f.zero()), std::domain_error);
    CHECK_THROWS_AS(f.pow(f.zero(), -1), std::domain_error);
}

TEST_CASE("generic path (no tables) agrees with field axioms") {
    auto f = Field::make(2, 1, 9);  // 2^18 elements: above the table threshold
    CHECK_FALSE(f.has_tables());
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = f.from_code(rng() % f.size()), b = f.from_code(rng() % f.size());
        CHECK(f.mul(a, b) == f.mul(b, a));
        if (a != f.zero()) {
            CHECK(f.mul(a, f.inv(a)) == f.one());
            CHECK(f.pow(a, f.size() - 1) == f.one());
        }
    }
}

TEST_CASE("Frobenius power fixes the field and group order holds") {
    for (auto [p, e, n] : {std::tuple<int, int, int>{2, 1, 3}, {3, 1, 3}}) {
        auto f = Field::make(p, e, n);
        for (auto x : f.enumerate()) CHECK(f.pow(x, f.size()) == x);
    }
    auto f = Field::make(2, 1, 5);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        auto x = f.from_code(1 + rng() % (f.size() - 1));
        CHECK(f.pow(x, f.size() - 1) == f.one());
    }
}

TEST_CASE("power laws with negative exponents") {
    auto f = Field::make(2, 1, 3);
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = f.from_code(1 + rng() % 63);
        std::int64_t a = static_cast<std::int64_t>(rng() % 41) - 20;
        std::int64_t b = static_cast<std::int64_t>(rng() % 41) - 20;
        CHECK(f.mul(f.pow(x, a), f.pow(x, b)) == f.pow(x, a + b));
        CHECK(f.pow(f.pow(x, a), b) == f.pow(x, a * b));
    }
    CHECK(f.pow(f.zero(), 0) == f.one());
    CHECK(f.pow(f.zero(), 5) == f.zero());
}

TEST_CASE("subfield membership counts and the F_4 subfield structure") {
    auto f = Field::make(2, 1, 3);
    for (int d : {1, 2, 3, 6}) {
        std::int64_t count = 0;
        for (auto x : f.enumerate())
            if (f.in_subfield(x, d)) ++count;
        CHECK(count == ggs::ipow(2, d));
    }
    CHECK_THROWS_AS(f.in_subfield(f.one(), 4), std::invalid_argument);  // 4 does not divide 6
    CHECK(f.in_subfield(f.zero(), 3));
    CHECK(f.in_subfield(f.one(), 1));

    // independent count of fixed points of x -> x^4 (two squarings, no pow)
    std::int64_t fixed = 0;
    for (auto x : f.enumerate()) {
        auto x2 = f.mul(x, x);
        if (f.mul(x2, x2) == x) ++fixed;
    }
    CHECK(fixed == 4);

    // the 4-element subfield is F_4: a cube-root-of-unity generator w has w^2 = w + 1
    std::vector<Field::Element> sub;
    for (auto x : f.enumerate())
        if (f.in_subfield(x, 2)) sub.push_back(x);
    REQUIRE(sub.size() == 4);
    int generators = 0;
    for (auto w : sub) {
        if (w == f.zero() || w == f.one()) continue;
        CHECK(f.mul(w, w) == f.add(w, f.one()));
        CHECK(f.pow(w, 3) == f.one());
        ++generators;
    }
    CHECK(generators == 2);

    auto f9 = Field::make(3, 1, 3);
    for (int d : {1, 2, 3, 6}) {
        std::int64_t count = 0;
        for (auto x : f9.enumerate())
            if (f9.in_subfield(x, d)) ++count;
        CHECK(count == ggs::ipow(3, d));
    }
}

TEST_CASE("enumeration is ascending and complete") {
    auto f = Field::make(2, 1, 3);
    auto all = f.enumerate();
    REQUIRE(all.size() == 64);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(f.encode(all[i]) == static_cast<std::int64_t>(i));
    auto sum = f.zero();
    for (auto x : all) sum = f.add(sum, x);
    CHECK(sum == f.zero());
}
