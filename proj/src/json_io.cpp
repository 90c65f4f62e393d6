#include "leonard/json_io.hpp"

namespace leonard::json_io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing key '") + key + "'");
  return j.at(key);
}

const char* status_name(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Pass: return "pass";
    case ConditionStatus::Fail: return "fail";
    case ConditionStatus::VacuousPass: return "vacuous";
  }
  return "?";
}

}  // namespace

json field_to_json(const FieldSpec& f) {
  if (f.is_rational()) return "rational";
  return json{{"prime", f.modulus()}};
}

FieldSpec field_from_json(const json& j) {
  if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
  if (j.is_object() && j.contains("prime") && j.at("prime").is_number_unsigned()) {
    return FieldSpec::prime(j.at("prime").get<std::uint64_t>());
  }
  schema_error("field must be \"rational\" or {\"prime\": p}");
}

json scalar_to_json(const Scalar& x) { return x.to_string(); }

Scalar scalar_from_json(FieldSpec f, const json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::parse(f, std::to_string(j.get<long long>()));
  schema_error("scalar must be a string such as \"-3/4\" or an integer");
}

json scalars_to_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

std::vector<Scalar> scalars_from_json(FieldSpec f, const json& j) {
  if (!j.is_array()) schema_error("expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(f, x));
  return out;
}

json params_to_json(const ParameterData& p) {
  return json{{"field", field_to_json(p.field)},
              {"d", p.d},
              {"theta", scalars_to_json(p.theta)},
              {"theta_star", scalars_to_json(p.theta_star)},
              {"varphi", scalars_to_json(p.varphi)},
              {"phi", scalars_to_json(p.phi)}};
}

ParameterData params_from_json(const json& j, FieldSpec default_field) {
  if (!j.is_object()) schema_error("parameter file must be a JSON object");
  ParameterData p;
  p.field = j.contains("field") ? field_from_json(j.at("field")) : default_field;
  const json& d = require(j, "d");
  if (!d.is_number_integer() || d.get<long long>() < 0) schema_error("d must be a nonnegative integer");
  p.d = d.get<int>();
  p.theta = scalars_from_json(p.field, require(j, "theta"));
  p.theta_star = scalars_from_json(p.field, require(j, "theta_star"));
  p.varphi = scalars_from_json(p.field, require(j, "varphi"));
  p.phi = scalars_from_json(p.field, require(j, "phi"));
  p.check_sizes();
  return p;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(scalar_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return json{{"field", field_to_json(m.field())}, {"n", m.size()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j, FieldSpec default_field) {
  if (!j.is_object()) schema_error("matrix file must be a JSON object");
  const FieldSpec f = j.contains("field") ? field_from_json(j.at("field")) : default_field;
  const json& entries = require(j, "entries");
  if (!entries.is_array() || entries.empty()) schema_error("entries must be a nonempty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : entries) rows.push_back(scalars_from_json(f, row));
  if (j.contains("n") && (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != rows.size())) {
    schema_error("n does not match the number of rows");
  }
  return Matrix::from_rows(f, rows);
}

json poly_to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(scalar_to_json(c));
  return out;
}

json grid_to_json(const std::vector<std::vector<Scalar>>& grid) {
  json out = json::array();
  for (const auto& row : grid) out.push_back(scalars_to_json(row));
  return out;
}

json validation_to_json(const ValidationReport& r) {
  json conds = json::array();
  for (std::size_t k = 0; k < r.conditions.size(); ++k) {
    const auto& c = r.conditions[k];
    conds.push_back(json{{"condition", k + 1}, {"status", status_name(c.status)}, {"offending", c.offending}});
  }
  json out{{"ok", r.ok()}, {"conditions", std::move(conds)}};
  out["common_value"] = r.common_value ? scalar_to_json(*r.common_value) : json(nullptr);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace leonard::json_io
