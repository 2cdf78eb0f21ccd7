#pragma once

#include <cstdint>
#include <vector>

#include "ggs/curve.hpp"
#include "ggs/divisor.hpp"
#include "ggs/linalg.hpp"

namespace ggs {

/// Exponent tuple of a monomial basis function
///   z^z_exp * prod_{mu>=1} (x - alpha_mu)^x_exps[mu-1]
///           * prod_{nu>=1} (y - beta_nu)^y_exps[nu-1].
/// Its valuation at P_0 is z_exp, at P_mu is z_exp + m(q+1) x_exps[mu-1],
/// at Q_nu is z_exp + m y_exps[nu-1], and at infinity it is minus the pole
/// order below.
struct LatticePoint {
    std::int64_t z_exp = 0;
    std::vector<std::int64_t> x_exps;  // length q-1
    std::vector<std::int64_t> y_exps;  // length q^2-1

    bool operator==(const LatticePoint&) const = default;
};

/// q^3 z_exp + m(q+1) sum(x_exps) + mq sum(y_exps).
std::int64_t pole_order_at_infinity(const Curve& curve, const LatticePoint& lp);

/// Valuation of the monomial at a distinguished place (Dpoint not supported).
std::int64_t valuation(const Curve& curve, const LatticePoint& lp, const PlaceId& place);

/// The lattice-point set indexing the monomial basis of L(G): exponent
/// tuples with z_exp >= -p_coeffs[0], the x/y exponents forced by ceiling
/// constraints, and pole order at infinity at most inf_coeff. Returned in
/// ascending z_exp order; the monomials form a basis of the Riemann-Roch
/// space, so ell(G) is the size of this set.
std::vector<LatticePoint> omega_set(const Curve& curve, const Divisor& g);

/// dim L(G) = |omega_set(G)|.
std::int64_t ell(const Curve& curve, const Divisor& g);

/// Exponent tuple of the alternative basis built from the local functions
///   tau = z^(q^(n-3)) / (x - alpha_0),
///   (x - alpha_mu)/(x - alpha_0)  and  (y - beta_nu)/(y - beta_0),
/// which swaps the roles of P_0 and P_inf.
struct RatioExponents {
    std::int64_t tau_exp = 0;
    std::vector<std::int64_t> x_ratio_exps;  // length q-1
    std::vector<std::int64_t> y_ratio_exps;  // length q^2-1

    bool operator==(const RatioExponents&) const = default;
};

/// The index set of the alternative basis; same cardinality as omega_set(G),
/// in ascending tau_exp order.
std::vector<RatioExponents> theta_set(const Curve& curve, const Divisor& g);

/// The two affine exponent maps identifying the two bases; they are mutually
/// inverse bijections.
LatticePoint to_monomial(const Curve& curve, const RatioExponents& rp);
RatioExponents to_ratio(const Curve& curve, const LatticePoint& lp);

/// Evaluates the monomial at dpoints()[d_index]; well-defined because no
/// factor vanishes on D.
Field::Element evaluate(const Curve& curve, const LatticePoint& lp, std::int64_t d_index);

/// Row r = basis[r] evaluated at every point of D. Rows are independent, so
/// the computation may be split across threads; output does not depend on
/// the thread count.
GFMatrix evaluation_matrix(const Curve& curve, const std::vector<LatticePoint>& basis, int threads = 1);

/// |{(a,b,c) : 0 <= a < m, 0 <= b <= q, c >= 0, q^3 a + mq b + m(q+1) c <= t}|.
/// Equals 1 - g + t once t >= 2g - 1.
std::int64_t psi_count(const Curve& curve, std::int64_t t);

/// Gap data of the numerical semigroup generated by positive integers with
/// gcd 1, by brute-force representability scan.
struct SemigroupGaps {
    std::vector<std::int64_t> gaps;  // ascending
    std::int64_t largest() const { return gaps.empty() ? -1 : gaps.back(); }
};
SemigroupGaps numerical_semigroup_gaps(const std::vector<std::int64_t>& generators);

}  // namespace ggs
