#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "ggs/intmath.hpp"

namespace ggs {

/// Arithmetic context for F_{p^{2ne}} with q = p^e and n > 1 odd.
///
/// Elements live in the power basis of a root of the canonical modulus: the
/// monic irreducible polynomial of degree 2ne over F_p whose coefficient
/// sequence (c_0,...,c_{d-1}) encodes to the smallest integer sum c_i p^i.
/// An element with coefficients (a_0,...,a_{d-1}) is identified by the same
/// base-p integer code, so encode/decode are positional-notation bijections.
///
/// The context is immutable after construction; all operations are pure and
/// safe for concurrent use.
class Field {
public:
    /// Element handle: the base-p integer code of the coefficient vector.
    struct Element {
        std::uint32_t code = 0;
        auto operator<=>(const Element&) const = default;
    };

    /// Builds the context. Requires p prime, e >= 1, n odd >= 3, and
    /// p^(2ne) <= 2^24 so that full-field enumeration stays tractable.
    static Field make(std::int64_t p, int e, int n);

    std::int64_t p() const { return p_; }
    int e() const { return e_; }
    int n() const { return n_; }
    int degree() const { return degree_; }          // 2*n*e over F_p
    std::int64_t q() const { return q_; }           // p^e
    std::int64_t size() const { return size_; }     // p^(2ne)
    /// Modulus coefficients c_0..c_{d-1}; the full polynomial is x^d + sum c_i x^i.
    const std::vector<int>& modulus() const { return modulus_; }

    Element zero() const { return Element{0}; }
    Element one() const { return Element{1}; }

    std::int64_t encode(Element x) const { return x.code; }
    /// Inverse of encode; throws std::out_of_range unless 0 <= v < size().
    Element from_code(std::int64_t v) const;
    std::vector<int> coeffs(Element x) const;
    Element from_coeffs(const std::vector<int>& c) const;

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;                   // throws on zero
    Element div(Element a, Element b) const;        // throws on zero divisor
    /// x^k with k of any sign; 0^0 = 1, 0^k = 0 for k > 0, and 0 with k < 0 throws.
    Element pow(Element x, std::int64_t k) const;

    /// True iff x lies in the subfield F_{p^d}; d must divide 2ne.
    bool in_subfield(Element x, int d) const;

    /// All elements in ascending encode() order.
    std::vector<Element> enumerate() const;

    /// Discrete-log tables are built when size() <= 2^16; they change speed,
    /// never results.
    bool has_tables() const { return !log_.empty(); }
    /// log of a nonzero element w.r.t. the table generator; -1 for zero.
    std::int32_t log(Element x) const { return log_[x.code]; }
    /// generator^(k mod (size-1)) for any k (also negative).
    Element exp(std::int64_t k) const {
        std::int64_t r = k % group_order_;
        if (r < 0) r += group_order_;
        return Element{exp_[static_cast<std::size_t>(r)]};
    }
    /// Raw table access for hot loops; valid only when has_tables().
    /// exp_table()[i] = code of generator^i for 0 <= i < size()-1;
    /// log_table()[code] is the inverse, with -1 at zero.
    const std::vector<std::uint32_t>& exp_table() const { return exp_; }
    const std::vector<std::int32_t>& log_table() const { return log_; }

private:
    std::int64_t p_ = 0;
    int e_ = 0;
    int n_ = 0;
    int degree_ = 0;
    std::int64_t q_ = 0;
    std::int64_t size_ = 0;
    std::int64_t group_order_ = 0;  // size-1
    std::vector<int> modulus_;      // c_0..c_{d-1}
    std::vector<std::uint32_t> exp_;
    std::vector<std::int32_t> log_;

    // Coefficient-domain arithmetic used to bootstrap the tables and as the
    // fallback when no tables exist.
    std::vector<int> to_poly(std::uint32_t code) const;
    std::uint32_t from_poly(const std::vector<int>& poly) const;
    std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_generic(std::uint32_t x, std::int64_t k) const;
    void build_tables();
};

/// Canonical modulus search: the minimal-encoding monic irreducible of the
/// given degree over F_p, found by sieving candidates in encode order.
std::vector<int> canonical_irreducible(std::int64_t p, int degree);

/// Irreducibility test over F_p for a monic polynomial given as c_0..c_{d-1}
/// (implicit leading coefficient 1).
bool is_irreducible(std::int64_t p, const std::vector<int>& coeffs);

}  // namespace ggs
