#pragma once

#include <string>

#include <json.hpp>

#include "ellsl2/liealg.hpp"
#include "ellsl2/report.hpp"
#include "ellsl2/rewrite.hpp"
#include "ellsl2/series.hpp"

namespace ellsl2::lab {

using nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

// {"dim": d, "entries": [[re, im], ...]} in row-major order.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

// {"order": N, "coeffs": [[re, im], ...]}.
json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

// [{"a": .., "b": .., "c": .., "coeff": "p/q"}, ...] in PBW order.
json ncpoly_to_json(const NCPoly& p);

json generators_to_json(const GeneratorTriple& g);

// {"residuals": {...}, "scales": {...}, "informational": {...}, "failed": [...]}.
json report_to_json(const ResidualReport& r, double tol);

// Compact JSON with every float written to 17 significant digits.
std::string dump_json(const json& j);

// "re+imi" with 17 significant digits.
std::string complex_to_text(Complex z);
std::string number_to_text(double v);
// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace ellsl2::lab
