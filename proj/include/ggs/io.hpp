#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "ggs/codes.hpp"
#include "ggs/curve.hpp"
#include "ggs/divisor.hpp"
#include "ggs/rrspace.hpp"

namespace ggs {

/// {"p":..., "e":..., "n":..., "modulus":[c_0,...]} identifying the field.
nlohmann::json field_metadata_json(const Field& f);

/// {"r":[...q ints...], "s":[...q^2-1 ints...], "t":int}
nlohmann::json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const Curve& curve, const nlohmann::json& j);
Divisor divisor_from_json_text(const Curve& curve, const std::string& text);

/// Field metadata, curve invariants, and the encoded (x,y,z) triples of the
/// P fiber, the Q fibers and D, all in canonical order.
nlohmann::json places_json(const Curve& curve);

/// One basis monomial per line: z exponent, the q-1 x exponents, then the
/// q^2-1 y exponents, space-separated.
std::string basis_lines(const std::vector<LatticePoint>& basis);

/// Text matrix format: header line "N k p e n", then k rows of N decimal
/// element codes.
void write_matrix(std::ostream& os, const Field& f, const GFMatrix& gen);
GFMatrix read_matrix(std::istream& is, const Field& f);

/// Code metadata: defining divisor, kind, dual constants, length/dimension
/// and the provenance of the distance bound.
nlohmann::json code_metadata_json(const Curve& curve, const LinearCode& code);

std::string bound_kind_name(BoundKind kind);

}  // namespace ggs
