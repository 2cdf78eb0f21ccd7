#include "ggs/curve.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ggs {

namespace {

// value -> sorted list of preimages, as a sorted pair list for O(log) lookup
struct PreimageMap {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;  // (value code, element code)

    void build(const Field& f, auto&& fn) {
        entries.reserve(static_cast<std::size_t>(f.size()));
        for (std::int64_t v = 0; v < f.size(); ++v) {
            Field::Element x = f.from_code(v);
            entries.emplace_back(static_cast<std::uint32_t>(f.encode(fn(x))), static_cast<std::uint32_t>(v));
        }
        std::sort(entries.begin(), entries.end());
    }

    // preimage codes in ascending order
    std::vector<std::uint32_t> at(std::uint32_t value) const {
        auto lo = std::lower_bound(entries.begin(), entries.end(), std::make_pair(value, std::uint32_t{0}));
        std::vector<std::uint32_t> out;
        for (auto it = lo; it != entries.end() && it->first == value; ++it) out.push_back(it->second);
        return out;
    }
};

}  // namespace

Curve Curve::make(Field field) {
    Curve c;
    c.field_ = std::move(field);
    const Field& f = c.field_;
    const std::int64_t q = f.q();
    const int n = f.n();
    c.q_ = q;
    c.m_ = (ipow(q, n) + 1) / (q + 1);
    c.genus_ = (q - 1) * (ipow(q, n + 1) + ipow(q, n) - q * q) / 2;
    c.total_places_ = ipow(q, 2 * n + 2) - ipow(q, n + 3) + ipow(q, n + 2) + 1;
    c.N_ = ipow(q, n + 2) * (ipow(q, n) - q + 1) - ipow(q, 3);

    // x^q + x and y^(q^2) - y as preimage maps over the whole field
    PreimageMap x_trace, y_trace;
    x_trace.build(f, [&](Field::Element x) { return f.add(f.pow(x, q), x); });
    y_trace.build(f, [&](Field::Element y) { return f.sub(f.pow(y, q * q), y); });

    for (std::uint32_t a : x_trace.at(0)) c.alphas_.push_back(f.from_code(a));
    if (static_cast<std::int64_t>(c.alphas_.size()) != q) throw std::logic_error("curve: alpha count != q");

    for (auto x : f.enumerate())
        if (f.in_subfield(x, 2 * f.e())) c.betas_.push_back(x);
    if (static_cast<std::int64_t>(c.betas_.size()) != q * q) throw std::logic_error("curve: beta count != q^2");

    c.fibers_.assign(static_cast<std::size_t>(q * q), {});
    for (std::int64_t gcode = 0; gcode < f.size(); ++gcode) {
        Field::Element z = f.from_code(gcode);
        Field::Element zm = f.pow(z, c.m_);
        for (std::uint32_t bcode : y_trace.at(static_cast<std::uint32_t>(f.encode(zm)))) {
            Field::Element y = f.from_code(bcode);
            Field::Element norm = f.mul(f.pow(y, q), y);  // y^(q+1)
            for (std::uint32_t acode : x_trace.at(static_cast<std::uint32_t>(f.encode(norm)))) {
                AffinePoint pt{f.from_code(acode), y, z};
                if (gcode == 0) {
                    auto it = std::lower_bound(c.betas_.begin(), c.betas_.end(), y);
                    c.fibers_[static_cast<std::size_t>(it - c.betas_.begin())].push_back(pt);
                } else {
                    c.dpoints_.push_back(pt);
                }
            }
        }
    }

    if (static_cast<std::int64_t>(c.dpoints_.size()) != c.N_) throw std::logic_error("curve: |D| != N");
    for (auto& fiber : c.fibers_)
        if (static_cast<std::int64_t>(fiber.size()) != q) throw std::logic_error("curve: z=0 fiber size != q");
    return c;
}

std::vector<AffinePoint> Curve::enumerate_affine() const {
    std::vector<AffinePoint> all;
    all.reserve(static_cast<std::size_t>(total_places_ - 1));
    for (const auto& fiber : fibers_) all.insert(all.end(), fiber.begin(), fiber.end());
    std::sort(all.begin(), all.end(), [](const AffinePoint& a, const AffinePoint& b) {
        return std::tie(a.z.code, a.y.code, a.x.code) < std::tie(b.z.code, b.y.code, b.x.code);
    });
    all.insert(all.end(), dpoints_.begin(), dpoints_.end());
    return all;
}

bool Curve::on_curve(const AffinePoint& pt) const {
    const Field& f = field_;
    bool eq1 = f.add(f.pow(pt.x, q_), pt.x) == f.mul(f.pow(pt.y, q_), pt.y);
    bool eq2 = f.sub(f.pow(pt.y, q_ * q_), pt.y) == f.pow(pt.z, m_);
    return eq1 && eq2;
}

std::vector<PlaceCoeff> principal_divisor(const Curve& curve, PrincipalKind kind, std::int64_t index) {
    const std::int64_t q = curve.q(), m = curve.m();
    std::vector<PlaceCoeff> out;
    switch (kind) {
        case PrincipalKind::XminusAlpha:
            if (index < 0 || index >= q) throw std::invalid_argument("principal_divisor: mu out of range");
            out.push_back({PlaceId::pmu(index), m * (q + 1)});
            out.push_back({PlaceId::pinf(), -m * (q + 1)});
            break;
        case PrincipalKind::YminusBeta:
            if (index < 0 || index >= q * q) throw std::invalid_argument("principal_divisor: nu out of range");
            if (index == 0) {
                for (std::int64_t mu = 0; mu < q; ++mu) out.push_back({PlaceId::pmu(mu), m});
            } else {
                out.push_back({PlaceId::qnu(index), m});
            }
            out.push_back({PlaceId::pinf(), -m * q});
            break;
        case PrincipalKind::Z:
            for (std::int64_t mu = 0; mu < q; ++mu) out.push_back({PlaceId::pmu(mu), 1});
            for (std::int64_t nu = 1; nu < q * q; ++nu) out.push_back({PlaceId::qnu(nu), 1});
            out.push_back({PlaceId::pinf(), -q * q * q});
            break;
    }
    return out;
}

}  // namespace ggs
