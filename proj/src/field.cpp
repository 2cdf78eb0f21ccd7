#include "ggs/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggs {

namespace {

using Poly = std::vector<std::int64_t>;  // little-endian, coefficients in [0,p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }  // deg(0) = -1

std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) {
    // p prime, a != 0 mod p
    std::int64_t r = 1, b = a % p, k = p - 2;
    while (k > 0) {
        if (k & 1) r = r * b % p;
        b = b * b % p;
        k >>= 1;
    }
    return r;
}

// Reduce a modulo the monic polynomial f (f.back() == 1), in place.
void reduce_mod(Poly& a, const Poly& f, std::int64_t p) {
    const int df = deg(f);
    for (int i = deg(a); i >= df; --i) {
        std::int64_t c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (int j = 0; j < df; ++j) {
            a[i - df + j] = (a[i - df + j] - c * f[j]) % p;
            if (a[i - df + j] < 0) a[i - df + j] += p;
        }
    }
    trim(a);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    reduce_mod(c, f, p);
    return c;
}

Poly powmod(Poly base, std::int64_t k, const Poly& f, std::int64_t p) {
    Poly r{1};
    while (k > 0) {
        if (k & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        k >>= 1;
    }
    return r;
}

Poly sub_poly(Poly a, const Poly& b, std::int64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] = (a[i] - b[i]) % p;
        if (a[i] < 0) a[i] += p;
    }
    trim(a);
    return a;
}

Poly gcd_poly(Poly a, Poly b, std::int64_t p) {
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        std::int64_t lead_inv = inv_mod_p(b.back(), p);
        for (int i = deg(a); i >= deg(b); --i) {
            std::int64_t c = a[i] % p;
            if (c == 0) continue;
            std::int64_t factor = c * lead_inv % p;
            for (int j = 0; j <= deg(b); ++j) {
                a[i - deg(b) + j] = (a[i - deg(b) + j] - factor * b[j]) % p;
                if (a[i - deg(b) + j] < 0) a[i - deg(b) + j] += p;
            }
        }
        trim(a);
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_irreducible(std::int64_t p, const std::vector<int>& coeffs) {
    const int d = static_cast<int>(coeffs.size());
    Poly f(coeffs.begin(), coeffs.end());
    f.push_back(1);  // monic
    if (d == 1) return true;
    if (coeffs[0] == 0) return false;  // divisible by x

    const Poly x{0, 1};
    // s_j = x^(p^j) mod f, computed by iterated Frobenius
    std::vector<Poly> frob(d + 1);
    frob[0] = x;
    for (int j = 1; j <= d; ++j) frob[j] = powmod(frob[j - 1], p, f, p);
    if (sub_poly(frob[d], x, p) != Poly{}) return false;
    for (std::int64_t r : prime_factors(d)) {
        Poly g = gcd_poly(sub_poly(frob[d / r], x, p), f, p);
        if (deg(g) > 0) return false;
    }
    return true;
}

std::vector<int> canonical_irreducible(std::int64_t p, int degree) {
    const std::int64_t count = ipow(p, degree);
    for (std::int64_t v = 0; v < count; ++v) {
        std::vector<int> coeffs(degree);
        std::int64_t rest = v;
        for (int i = 0; i < degree; ++i) {
            coeffs[i] = static_cast<int>(rest % p);
            rest /= p;
        }
        if (is_irreducible(p, coeffs)) return coeffs;
    }
    throw std::logic_error("canonical_irreducible: no irreducible found");
}

Field Field::make(std::int64_t p, int e, int n) {
    if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
    if (e < 1) throw std::invalid_argument("field: e must be positive");
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("field: n must be odd and >= 3");
    const int d = 2 * n * e;
    std::int64_t size = 1;
    for (int i = 0; i < d; ++i) {
        size *= p;
        if (size > (std::int64_t{1} << 24))
            throw std::invalid_argument("field: p^(2ne) exceeds the 2^24 enumeration guard");
    }
    Field f;
    f.p_ = p;
    f.e_ = e;
    f.n_ = n;
    f.degree_ = d;
    f.q_ = ipow(p, e);
    f.size_ = size;
    f.group_order_ = size - 1;
    f.modulus_ = canonical_irreducible(p, d);
    if (size <= (std::int64_t{1} << 16)) f.build_tables();
    return f;
}

std::vector<int> Field::to_poly(std::uint32_t code) const {
    std::vector<int> c(degree_);
    std::int64_t rest = code;
    for (int i = 0; i < degree_; ++i) {
        c[i] = static_cast<int>(rest % p_);
        rest /= p_;
    }
    return c;
}

std::uint32_t Field::from_poly(const std::vector<int>& poly) const {
    std::int64_t v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = v * p_ + poly[i];
    return static_cast<std::uint32_t>(v);
}

Field::Element Field::from_code(std::int64_t v) const {
    if (v < 0 || v >= size_) throw std::out_of_range("field: element code out of range");
    return Element{static_cast<std::uint32_t>(v)};
}

std::vector<int> Field::coeffs(Element x) const { return to_poly(x.code); }

Field::Element Field::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != degree_)
        throw std::invalid_argument("field: coefficient vector must have length 2ne");
    for (int v : c)
        if (v < 0 || v >= p_) throw std::invalid_argument("field: coefficient out of [0,p)");
    return Element{from_poly(c)};
}

Field::Element Field::add(Element a, Element b) const {
    if (p_ == 2) return Element{a.code ^ b.code};
    std::int64_t va = a.code, vb = b.code, out = 0, place = 1;
    for (int i = 0; i < degree_; ++i) {
        out += place * ((va % p_ + vb % p_) % p_);
        va /= p_;
        vb /= p_;
        place *= p_;
    }
    return Element{static_cast<std::uint32_t>(out)};
}

Field::Element Field::neg(Element a) const {
    if (p_ == 2) return a;
    std::int64_t va = a.code, out = 0, place = 1;
    for (int i = 0; i < degree_; ++i) {
        out += place * ((p_ - va % p_) % p_);
        va /= p_;
        place *= p_;
    }
    return Element{static_cast<std::uint32_t>(out)};
}

Field::Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

std::uint32_t Field::mul_generic(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    Poly pa, pb;
    for (int v : to_poly(a)) pa.push_back(v);
    for (int v : to_poly(b)) pb.push_back(v);
    trim(pa);
    trim(pb);
    Poly f(modulus_.begin(), modulus_.end());
    f.push_back(1);
    Poly c = mulmod(pa, pb, f, p_);
    std::vector<int> ci(c.begin(), c.end());
    return from_poly(ci);
}

std::uint32_t Field::pow_generic(std::uint32_t x, std::int64_t k) const {
    // x != 0; k >= 0
    std::uint32_t r = 1, base = x;
    while (k > 0) {
        if (k & 1) r = mul_generic(r, base);
        base = mul_generic(base, base);
        k >>= 1;
    }
    return r;
}

Field::Element Field::mul(Element a, Element b) const {
    if (a.code == 0 || b.code == 0) return zero();
    if (has_tables()) {
        std::int64_t s = std::int64_t{log_[a.code]} + log_[b.code];
        if (s >= group_order_) s -= group_order_;
        return Element{exp_[static_cast<std::size_t>(s)]};
    }
    return Element{mul_generic(a.code, b.code)};
}

Field::Element Field::inv(Element a) const {
    if (a.code == 0) throw std::domain_error("field: division by zero");
    if (has_tables()) {
        std::int64_t s = (group_order_ - log_[a.code]) % group_order_;
        return Element{exp_[static_cast<std::size_t>(s)]};
    }
    return Element{pow_generic(a.code, size_ - 2)};
}

Field::Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Field::Element Field::pow(Element x, std::int64_t k) const {
    if (x.code == 0) {
        if (k == 0) return one();
        if (k < 0) throw std::domain_error("field: negative power of zero");
        return zero();
    }
    std::int64_t r = k % group_order_;
    if (r < 0) r += group_order_;
    if (has_tables()) return exp(std::int64_t{log_[x.code]} * r);
    return Element{pow_generic(x.code, r)};
}

bool Field::in_subfield(Element x, int d) const {
    if (d < 1 || degree_ % d != 0) throw std::invalid_argument("field: subfield degree must divide 2ne");
    return pow(x, ipow(p_, d)) == x;
}

std::vector<Field::Element> Field::enumerate() const {
    std::vector<Element> all(static_cast<std::size_t>(size_));
    for (std::int64_t v = 0; v < size_; ++v) all[static_cast<std::size_t>(v)].code = static_cast<std::uint32_t>(v);
    return all;
}

void Field::build_tables() {
    const auto factors = prime_factors(group_order_);
    std::uint32_t gen = 0;
    for (std::int64_t c = 2; c < size_; ++c) {
        bool primitive = true;
        for (std::int64_t r : factors) {
            if (pow_generic(static_cast<std::uint32_t>(c), group_order_ / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = static_cast<std::uint32_t>(c);
            break;
        }
    }
    if (gen == 0) throw std::logic_error("field: no multiplicative generator found");
    exp_.assign(static_cast<std::size_t>(group_order_), 0);
    log_.assign(static_cast<std::size_t>(size_), -1);
    std::uint32_t acc = 1;
    for (std::int64_t i = 0; i < group_order_; ++i) {
        exp_[static_cast<std::size_t>(i)] = acc;
        log_[acc] = static_cast<std::int32_t>(i);
        acc = mul_generic(acc, gen);
    }
}

}  // namespace ggs
