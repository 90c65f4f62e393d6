#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "leonard/field.hpp"
#include "leonard/matrix.hpp"
#include "leonard/params.hpp"
#include "leonard/poly.hpp"
#include "leonard/system.hpp"

namespace leonard::json_io {

using json = nlohmann::json;

/// "rational" or {"prime": p}. Strings accepted by FieldSpec::parse ("p:7",
/// "GF(7)") are read too.
json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

/// Scalars are decimal strings ("3", "-1/2"); integers are accepted on input.
json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(FieldSpec f, const json& j);
json scalars_to_json(const std::vector<Scalar>& v);
std::vector<Scalar> scalars_from_json(FieldSpec f, const json& j);

/// {"field", "d", "theta", "theta_star", "varphi", "phi"}. The field falls
/// back to `default_field` when absent. Throws ParseError on schema errors.
json params_to_json(const ParameterData& p);
ParameterData params_from_json(const json& j, FieldSpec default_field);

/// {"field", "n", "entries": [[...], ...]}.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, FieldSpec default_field);

/// Coefficients, lowest degree first.
json poly_to_json(const Poly& p);

json grid_to_json(const std::vector<std::vector<Scalar>>& grid);

json validation_to_json(const ValidationReport& r);

/// Sorted-key rendering with two-space indentation and a trailing newline.
std::string dump(const json& j);

}  // namespace leonard::json_io
