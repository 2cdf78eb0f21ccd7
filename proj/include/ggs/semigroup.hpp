#pragma once

#include <cstdint>
#include <vector>

#include "ggs/divisor.hpp"
#include "ggs/rrspace.hpp"

namespace ggs {

/// Query tuple for semigroup and pure-gap tests at (P_0, ..., P_l) and
/// optionally P_inf. place_coeffs has length l+1 with l < q.
struct WProfile {
    std::vector<std::int64_t> place_coeffs;
    std::int64_t inf_coeff = 0;
    bool include_infinity = false;

    int l() const { return static_cast<int>(place_coeffs.size()) - 1; }
};

/// Embeds the profile into a divisor on the distinguished places.
Divisor profile_divisor(const Curve& curve, const WProfile& prof);

/// The membership criteria are inequalities with a single fractional term;
/// multiplying through by m(q+1) keeps every boundary case exact. These
/// return m(q+1) * W_j and m(q+1) * W_inf.
std::int64_t w_scaled(const Curve& curve, const WProfile& prof, int j);
std::int64_t w_inf_scaled(const Curve& curve, const WProfile& prof);

bool w_j_nonpositive(const Curve& curve, const WProfile& prof, int j);
bool w_inf_nonpositive(const Curve& curve, const WProfile& prof);

/// Tuple lies in the Weierstrass semigroup of its places: W_j <= 0 for all
/// 0 <= j <= l and, when P_inf is included, W_inf <= 0. Coordinates must be
/// nonnegative.
bool in_weierstrass(const Curve& curve, const WProfile& prof);

/// Tuple is a pure gap: every W strictly positive. Coordinates must be
/// strictly positive.
bool is_pure_gap(const Curve& curve, const WProfile& prof);

/// Independent recomputation through Riemann-Roch dimension differences:
/// membership iff ell drops when any single place is removed; pure gap iff
/// ell never drops.
bool oracle_in_weierstrass(const Curve& curve, const WProfile& prof);
bool oracle_is_pure_gap(const Curve& curve, const WProfile& prof);

/// Gap sequence at P_0 from the two-case characterization
/// k = a + m(b + (q+1)c); exactly genus() many values, ascending.
std::vector<std::int64_t> gaps_at_p0(const Curve& curve);

/// All pure-gap tuples inside the box [1, box[0]] x ... in lexicographic
/// order; the box has l+1 entries, plus one for P_inf when included. Guarded
/// to at most 10^7 tuples.
std::vector<std::vector<std::int64_t>> enumerate_pure_gaps(const Curve& curve, int l, bool include_infinity,
                                                           const std::vector<std::int64_t>& box);

}  // namespace ggs
