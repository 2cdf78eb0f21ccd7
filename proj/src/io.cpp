#include "ggs/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ggs {

using nlohmann::json;

json field_metadata_json(const Field& f) {
    return json{{"p", f.p()}, {"e", f.e()}, {"n", f.n()}, {"modulus", f.modulus()}};
}

json divisor_to_json(const Divisor& d) {
    return json{{"r", d.p_coeffs}, {"s", d.q_coeffs}, {"t", d.inf_coeff}};
}

Divisor divisor_from_json(const Curve& curve, const json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("s") || !j.contains("t"))
        throw std::invalid_argument("divisor JSON: need an object with keys r, s, t");
    Divisor d;
    try {
        d.p_coeffs = j.at("r").get<std::vector<std::int64_t>>();
        d.q_coeffs = j.at("s").get<std::vector<std::int64_t>>();
        d.inf_coeff = j.at("t").get<std::int64_t>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("divisor JSON: ") + e.what());
    }
    check_divisor(curve, d);
    return d;
}

Divisor divisor_from_json_text(const Curve& curve, const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("divisor JSON: parse error");
    return divisor_from_json(curve, j);
}

namespace {

json point_triple(const Field& f, const AffinePoint& pt) {
    return json::array({f.encode(pt.x), f.encode(pt.y), f.encode(pt.z)});
}

}  // namespace

json places_json(const Curve& curve) {
    const Field& f = curve.field();
    json out;
    out["field"] = field_metadata_json(f);
    out["m"] = curve.m();
    out["genus"] = curve.genus();
    out["total_places"] = curve.total_places();
    out["N"] = curve.num_eval_points();

    json p_fiber = json::array();
    for (const auto& pt : curve.z_zero_fiber(0)) p_fiber.push_back(point_triple(f, pt));
    out["P"] = p_fiber;

    json q_fibers = json::array();
    for (std::int64_t nu = 1; nu < curve.q() * curve.q(); ++nu) {
        json fiber = json::array();
        for (const auto& pt : curve.z_zero_fiber(nu)) fiber.push_back(point_triple(f, pt));
        q_fibers.push_back(fiber);
    }
    out["Q"] = q_fibers;

    json d = json::array();
    for (const auto& pt : curve.dpoints()) d.push_back(point_triple(f, pt));
    out["D"] = d;
    return out;
}

std::string basis_lines(const std::vector<LatticePoint>& basis) {
    std::ostringstream os;
    for (const auto& lp : basis) {
        os << lp.z_exp;
        for (auto v : lp.x_exps) os << ' ' << v;
        for (auto v : lp.y_exps) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

void write_matrix(std::ostream& os, const Field& f, const GFMatrix& gen) {
    os << gen.cols() << ' ' << gen.rows() << ' ' << f.p() << ' ' << f.e() << ' ' << f.n() << '\n';
    for (std::int64_t i = 0; i < gen.rows(); ++i) {
        const std::uint32_t* row = gen.row_data(i);
        for (std::int64_t j = 0; j < gen.cols(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
}

GFMatrix read_matrix(std::istream& is, const Field& f) {
    std::int64_t n = 0, k = 0, p = 0;
    int e = 0, nn = 0;
    if (!(is >> n >> k >> p >> e >> nn)) throw std::invalid_argument("matrix: bad header");
    if (p != f.p() || e != f.e() || nn != f.n())
        throw std::invalid_argument("matrix: header field parameters do not match");
    GFMatrix out(k, n);
    for (std::int64_t i = 0; i < k; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            std::int64_t code = -1;
            if (!(is >> code)) throw std::invalid_argument("matrix: truncated body");
            out.set(i, j, f.from_code(code));
        }
    return out;
}

std::string bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::None: return "none";
        case BoundKind::Goppa: return "goppa";
        case BoundKind::Floor: return "floor";
        case BoundKind::PureGap: return "puregap";
    }
    return "none";
}

json code_metadata_json(const Curve& curve, const LinearCode& code) {
    json out;
    out["field"] = field_metadata_json(curve.field());
    out["kind"] = code.kind == CodeKind::Evaluation ? "C_L" : "C_Omega";
    out["divisor"] = divisor_to_json(code.divisor);
    out["N"] = code.length;
    out["k"] = code.dimension;
    out["A"] = dual_constant_a(curve);
    out["B"] = dual_constant_b(curve);
    out["d_lower"] = code.d_lower;
    out["d_lower_kind"] = bound_kind_name(code.d_lower_kind);
    if (code.d_upper) out["d_upper"] = *code.d_upper;
    return out;
}

}  // namespace ggs
