#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ggs/divisor.hpp"
#include "ggs/floors.hpp"
#include "ggs/linalg.hpp"
#include "ggs/rrspace.hpp"

namespace ggs {

enum class CodeKind { Evaluation, Differential };
enum class BoundKind { None, Goppa, Floor, PureGap };

struct LinearCode {
    CodeKind kind = CodeKind::Evaluation;
    Divisor divisor;             // the defining divisor G
    std::int64_t length = 0;     // N
    std::int64_t dimension = 0;  // k = rank of the generator
    GFMatrix generator;          // k x N, full rank, canonical rref rows
    std::int64_t d_lower = 1;    // proven lower bound on the minimum distance
    BoundKind d_lower_kind = BoundKind::None;
    std::optional<std::int64_t> d_upper;  // best sampled codeword weight
};

/// Two published values of the dual-divisor constant A circulate; only the
/// corrected one satisfies the degree identity q^3 A + B = N + 2g - 2, and
/// only it passes machine duality. The uncorrected value is kept callable so
/// that the failure stays reproducible.
enum class DualConstant { Corrected, Uncorrected };

std::int64_t dual_constant_a(const Curve& curve, DualConstant variant = DualConstant::Corrected);
std::int64_t dual_constant_b(const Curve& curve);
bool dual_degree_identity_holds(const Curve& curve, DualConstant variant);

struct DualData {
    std::int64_t A = 0;
    std::int64_t B = 0;
    std::vector<Field::Element> rho;  // twist vector evaluated on D; never zero there
    Divisor dual_divisor;             // (A - r) P + (A - s) Q + (B - t) P_inf
};

DualData dual_data(const Curve& curve, const Divisor& g, DualConstant variant = DualConstant::Corrected);

/// dim C_L(D,G) by the closed form: |omega(G)| below length N, and
/// N - |omega(dual G)| from N up to N + 2g - 2.
std::int64_t evaluation_dimension(const Curve& curve, const Divisor& g);

/// C_L(D,G): rows evaluate the monomial basis of L(G) on D, reduced to a
/// full-rank generator. Requires 0 <= deg G <= N + 2g - 2.
LinearCode build_evaluation_code(const Curve& curve, const Divisor& g, int threads = 1);

/// C_Omega(D,G) as the evaluation code of the dual divisor with every
/// coordinate divided by the twist value there (the inverse twist is the
/// orientation that passes machine duality; it is trivial at n = 3).
LinearCode build_differential_code(const Curve& curve, const Divisor& g, int threads = 1,
                                   DualConstant variant = DualConstant::Corrected);

/// True iff every row of a is orthogonal to every row of b and the row
/// counts add up to the length.
bool verify_duality(const Field& f, const GFMatrix& a, const GFMatrix& b);
bool verify_duality(const Field& f, const LinearCode& a, const LinearCode& b);

/// Raises d_lower of a differential code to 2 deg(H) - (2g-2) when its
/// divisor is exactly H + floor(H).
LinearCode with_floor_bound(const Curve& curve, LinearCode code, const Divisor& h);

/// Distance bound from a box of pure gaps: for places (P_0..P_l[, P_inf])
/// and corner tuples lo <= hi whose whole box consists of pure gaps, the
/// divisor sum (lo_i + hi_i - 1) place_i gives
///   d >= deg G - (2g - 2) + #places + sum(hi - lo).
struct PureGapBound {
    std::int64_t bound = 0;
    Divisor divisor;  // the divisor the bound certifies
};
PureGapBound pure_gap_distance_bound(const Curve& curve, const std::vector<std::int64_t>& lo,
                                     const std::vector<std::int64_t>& hi, bool include_infinity);

/// Applies pure_gap_distance_bound to a differential code whose divisor
/// matches the certified one.
LinearCode with_pure_gap_bound(const Curve& curve, LinearCode code, const std::vector<std::int64_t>& lo,
                               const std::vector<std::int64_t>& hi, bool include_infinity);

/// Minimum Hamming weight over `trials` random nonzero codewords, drawn from
/// the xorshift64* stream of the given seed (message symbols are next()
/// modulo the field size). Deterministic for a fixed seed. Throws
/// std::runtime_error if any sampled weight falls below code.d_lower.
std::int64_t sample_weights(const Field& f, const LinearCode& code, std::int64_t trials, std::uint64_t seed);

}  // namespace ggs
