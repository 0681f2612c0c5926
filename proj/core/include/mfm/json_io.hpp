#pragma once

// JSON (de)serialization of the library types. The parameter-set schema is
// shared between the CLI and file inputs:
//   {"m": int, "a": [[re, im], ...], "b": [[re, im], ...], "x": [re, im]}
// with m+1 entries in a and b and b[0] = [0, 0]; "x" is optional.

#include <optional>

#include <nlohmann/json.hpp>

#include "mfm/periods.hpp"
#include "mfm/series.hpp"

namespace mfm {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const ParameterSet& p);
ParameterSet parameter_set_from_json(const Json& j);

// Reads an optional real "x" entry ([re, im] with im = 0, or a plain number).
std::optional<double> x_from_json(const Json& j);

Json to_json(const SeriesValue& sv);
Json to_json(const IntersectionMatrix& mat);
Json to_json(const PeriodRow& row);
Json to_json(const VerificationReport& report);

std::string matrix_kind_name(MatrixKind kind);

} // namespace mfm
