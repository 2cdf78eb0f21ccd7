#pragma once

#include <cstdint>
#include <vector>

#include "ggs/field.hpp"

namespace ggs {

/// Affine rational point of the curve x^q + x = y^(q+1), y^(q^2) - y = z^m.
struct AffinePoint {
    Field::Element x, y, z;
    auto operator<=>(const AffinePoint&) const = default;
};

/// Distinguished place of the function field.
///
/// Pmu(mu):   degree-1 place over (alpha_mu, 0, 0), 0 <= mu < q
/// Qnu(nu):   degree-q place bundling the q points over beta_nu with z = 0,
///            1 <= nu < q^2 (the bundle over beta_0 is kept expanded as the Pmu list)
/// Pinf:      the place at infinity
/// Dpoint(i): i-th evaluation point (z != 0) in canonical order
struct PlaceId {
    enum class Kind { Pmu, Qnu, Pinf, Dpoint };
    Kind kind = Kind::Pinf;
    std::int64_t index = 0;

    static PlaceId pmu(std::int64_t mu) { return {Kind::Pmu, mu}; }
    static PlaceId qnu(std::int64_t nu) { return {Kind::Qnu, nu}; }
    static PlaceId pinf() { return {Kind::Pinf, 0}; }
    static PlaceId dpoint(std::int64_t i) { return {Kind::Dpoint, i}; }
    auto operator<=>(const PlaceId&) const = default;
};

struct PlaceCoeff {
    PlaceId place;
    std::int64_t coeff = 0;
};

/// The three shapes of function whose divisor is known in closed form.
enum class PrincipalKind { XminusAlpha, YminusBeta, Z };

/// Immutable context for one curve: numeric invariants, the distinguished
/// places, and the canonical evaluation set D (all points with z != 0,
/// sorted ascending by (encode z, encode y, encode x)).
class Curve {
public:
    static Curve make(Field field);

    const Field& field() const { return field_; }
    std::int64_t q() const { return q_; }
    int n() const { return field_.n(); }
    std::int64_t m() const { return m_; }                       // (q^n+1)/(q+1)
    std::int64_t genus() const { return genus_; }
    std::int64_t total_places() const { return total_places_; }
    std::int64_t num_eval_points() const { return N_; }         // |D|

    /// Roots of x^q + x = 0, ascending by encode; alphas()[0] is zero.
    const std::vector<Field::Element>& alphas() const { return alphas_; }
    /// All elements of F_{q^2}, ascending by encode; betas()[0] is zero.
    const std::vector<Field::Element>& betas() const { return betas_; }
    /// Evaluation points, canonical order.
    const std::vector<AffinePoint>& dpoints() const { return dpoints_; }
    /// The q points with z = 0 over betas()[nu], ascending by encode(x).
    const std::vector<AffinePoint>& z_zero_fiber(std::int64_t nu) const { return fibers_.at(nu); }

    /// All affine points in canonical order; size is total_places() - 1.
    std::vector<AffinePoint> enumerate_affine() const;

    bool on_curve(const AffinePoint& pt) const;
    std::int64_t place_degree(const PlaceId& id) const { return id.kind == PlaceId::Kind::Qnu ? q_ : 1; }

private:
    Field field_;
    std::int64_t q_ = 0, m_ = 0, genus_ = 0, total_places_ = 0, N_ = 0;
    std::vector<Field::Element> alphas_, betas_;
    std::vector<AffinePoint> dpoints_;
    std::vector<std::vector<AffinePoint>> fibers_;
};

/// Valuations of div(x - alpha_mu), div(y - beta_nu) or div(z) on the
/// distinguished places; index selects mu in [0,q) or nu in [0,q^2) and is
/// ignored for Z. The bundle over beta_0 appears expanded into Pmu terms.
std::vector<PlaceCoeff> principal_divisor(const Curve& curve, PrincipalKind kind, std::int64_t index = 0);

}  // namespace ggs
