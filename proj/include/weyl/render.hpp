#pragma once

// Canonical text and JSON renderings. Text uses explicit `*`, `^` for powers,
// `d[a1,...,an]` for divided-power symbols, and the graded order of the term
// maps (largest first), so output is byte-stable.

#include <string>

#include "json.hpp"

#include "weyl/artinian.hpp"
#include "weyl/diffop.hpp"
#include "weyl/levelmat.hpp"

namespace weyl {

inline constexpr const char* kJsonSchema = "weyl-op/1";

using Json = nlohmann::ordered_json;

std::string to_text(const Polynomial& f);
std::string to_text(const DiffOp& xi);
std::string to_text(const LevelMatrix& m);
std::string to_text(const Matrix& m);

/// [{"exponent": [...], "coeff": "..."}] in canonical order.
Json poly_terms_json(const Polynomial& f);
/// {"schema", "char", "vars", "terms": [{"exponent", "coefficient"}]}.
Json to_json(const DiffOp& xi);
Json to_json(const LevelMatrix& m);
/// Row-major list of string entries.
Json matrix_json(const Matrix& m);
/// Header fields shared by every document: schema, char, vars.
Json json_header(const PolyRing& ring);

}  // namespace weyl
