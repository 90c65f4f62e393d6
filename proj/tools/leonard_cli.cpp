// Command-line front end: reads parameter / matrix files, runs one
// operation, and prints a deterministic JSON report on stdout.
//
// Exit status: 0 success, 1 mathematically invalid input, 2 usage or parse
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "leonard/closed_form.hpp"
#include "leonard/d4.hpp"
#include "leonard/json_io.hpp"
#include "leonard/polys.hpp"
#include "leonard/relations.hpp"
#include "leonard/system.hpp"

using namespace leonard;
using json_io::json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

const char* kSchemaHelp = R"(File schemas (JSON):
  parameters: {"field": "rational" | {"prime": p}, "d": 3,
               "theta": [...], "theta_star": [...],   (d+1 entries each)
               "varphi": [...], "phi": [...]}          (d entries each)
  matrix:     {"field": ..., "n": 4, "entries": [["0", "3", ...], ...]}
Scalars are strings such as "-3/4" or integers. The field defaults to
$LEONARD_FIELD (rational | p:<prime>), else rational; --field overrides it.
)";

// Thrown for failures that are the caller's fault rather than the math's.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output;
  std::string field;
};

FieldSpec default_field(const Options& opt) {
  if (!opt.field.empty()) return FieldSpec::parse(opt.field);
  if (const char* env = std::getenv("LEONARD_FIELD"); env != nullptr && *env != '\0') return FieldSpec::parse(env);
  return FieldSpec::rational();
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// --field forces the field even when the file names one.
json apply_field_override(json j, const Options& opt) {
  if (!opt.field.empty() && j.is_object()) j.erase("field");
  return j;
}

ParameterData load_params(const std::string& path, const Options& opt) {
  return json_io::params_from_json(apply_field_override(read_json(path), opt), default_field(opt));
}

Matrix load_matrix(const json& j, const Options& opt) {
  return json_io::matrix_from_json(apply_field_override(j, opt), default_field(opt));
}

json rep_to_json(const LeonardSystemRep& rep) {
  json E = json::array(), Es = json::array();
  for (const auto& m : rep.E) E.push_back(json_io::matrix_to_json(m));
  for (const auto& m : rep.E_star) Es.push_back(json_io::matrix_to_json(m));
  return json{{"A", json_io::matrix_to_json(rep.A)},
              {"A_star", json_io::matrix_to_json(rep.A_star)},
              {"E", std::move(E)},
              {"E_star", std::move(Es)},
              {"theta", json_io::scalars_to_json(rep.theta)},
              {"theta_star", json_io::scalars_to_json(rep.theta_star)}};
}

json scalars_json(const RelationScalars& s) {
  return json{{"beta", json_io::scalar_to_json(s.beta)},       {"gamma", json_io::scalar_to_json(s.gamma)},
              {"gamma_star", json_io::scalar_to_json(s.gamma_star)}, {"rho", json_io::scalar_to_json(s.rho)},
              {"rho_star", json_io::scalar_to_json(s.rho_star)}, {"unique", s.unique}};
}

json positions_json(const std::vector<std::pair<std::size_t, std::size_t>>& v) {
  json out = json::array();
  for (const auto& [i, k] : v) out.push_back(json::array({i, k}));
  return out;
}

json recurrence_json(const std::vector<Scalar>& seq) {
  const RecurrenceClass c = classify_recurrence(seq);
  json out{{"kind", to_string(c.kind)}};
  out["beta"] = c.beta ? json_io::scalar_to_json(*c.beta) : json(nullptr);
  out["gamma"] = c.gamma ? json_io::scalar_to_json(*c.gamma) : json(nullptr);
  out["rho"] = c.rho ? json_io::scalar_to_json(*c.rho) : json(nullptr);
  return out;
}

// Each command fills `report` and returns an exit status.
int cmd_validate(const std::string& path, const Options& opt, json& report) {
  const ParameterData p = load_params(path, opt);
  const ValidationReport v = validate_parameter_array(p);
  report["validation"] = json_io::validation_to_json(v);
  report["theta_recurrence"] = recurrence_json(p.theta);
  report["theta_star_recurrence"] = recurrence_json(p.theta_star);
  return v.ok() ? kOk : kInvalid;
}

int cmd_build(const std::string& path, const Options& opt, json& report) {
  const ParameterData p = load_params(path, opt);
  const ValidationReport v = validate_parameter_array(p);
  report["validation"] = json_io::validation_to_json(v);
  if (!v.ok()) return kInvalid;
  report["system"] = rep_to_json(build_split_form(p));
  return kOk;
}

int cmd_recognize(const std::vector<std::string>& paths, const Options& opt, json& report) {
  Matrix A, As;
  if (paths.size() == 1) {
    // Accept the output of `build` (or any object holding A and A_star).
    json j = read_json(paths[0]);
    if (j.contains("system")) j = j.at("system");
    if (!j.contains("A") || !j.contains("A_star")) throw UsageError("expected an object with keys A and A_star");
    A = load_matrix(j.at("A"), opt);
    As = load_matrix(j.at("A_star"), opt);
  } else if (paths.size() == 2) {
    A = load_matrix(read_json(paths[0]), opt);
    As = load_matrix(read_json(paths[1]), opt);
  } else {
    throw UsageError("recognize takes A.json A_star.json, or one file holding both");
  }
  try {
    const RecognitionResult r = recognize_leonard_pair(A, As);
    json systems = json::array();
    for (const auto& s : r.systems) systems.push_back(json_io::params_to_json(s.params));
    report["leonard_pair"] = true;
    report["systems"] = std::move(systems);
    return kOk;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DimensionMismatch || e.code() == ErrorCode::FieldMismatch) throw;
    report["leonard_pair"] = false;
    report["reason"] = std::string(to_string(e.code()));
    report["message"] = e.what();
    return kInvalid;
  }
}

int cmd_relatives(const std::string& path, const Options& opt, json& report) {
  const ParameterData p = load_params(path, opt);
  const ValidationReport v = validate_parameter_array(p);
  report["validation"] = json_io::validation_to_json(v);
  if (!v.ok()) return kInvalid;
  const LeonardSystemRep rep = build_split_form(p);
  json rows = json::array();
  bool consistent = true;
  for (const auto& g : D4Element::all()) {
    // Row g lists the parameters of Φ^{g^{-1}}; cross-check by matrices.
    const ParameterData row = d4_transform(p, g);
    const bool match = extract_parameters(relative(rep, g.inverse())) == row;
    consistent = consistent && match;
    rows.push_back(json{{"element", g.name()}, {"parameters", json_io::params_to_json(row)}, {"matches_matrices", match}});
  }
  report["relatives"] = std::move(rows);
  report["consistent"] = consistent;
  return consistent ? kOk : kInvalid;
}

int cmd_relations(const std::string& path, const std::string& preset, const std::string& q_text, const Options& opt,
                  json& report) {
  const ParameterData p = load_params(path, opt);
  const ValidationReport v = validate_parameter_array(p);
  report["validation"] = json_io::validation_to_json(v);
  if (!v.ok()) return kInvalid;
  const LeonardSystemRep rep = build_split_form(p);
  RelationScalars s;
  if (preset.empty()) {
    s = compute_relation_scalars(p);
  } else if (preset == "q-serre") {
    if (q_text.empty()) throw UsageError("--preset q-serre needs --q");
    s = q_serre_preset(Scalar::parse(p.field, q_text));
  } else {
    s = dolan_grady_preset(p.field);
  }
  report["preset"] = preset.empty() ? json(nullptr) : json(preset);
  report["scalars"] = scalars_json(s);
  const CommutatorReport c = verify_tridiagonal_relations(rep, s);
  report["residual"] = json_io::matrix_to_json(c.residual);
  report["residual_star"] = json_io::matrix_to_json(c.residual_star);
  report["nonzero"] = positions_json(c.nonzero);
  report["nonzero_star"] = positions_json(c.nonzero_star);
  report["relations_hold"] = c.ok();
  const VanishingProductsReport vp = vanishing_products_check(rep, p);
  report["vanishing_products"] =
      json{{"products_vanish", vp.products_vanish}, {"recursion_holds", vp.recursion_holds}, {"agree", vp.agree()}};
  return c.ok() ? kOk : kInvalid;
}

int cmd_polys(const std::string& path, const Options& opt, json& report) {
  const ParameterData p = load_params(path, opt);
  const ValidationReport v = validate_parameter_array(p);
  report["validation"] = json_io::validation_to_json(v);
  if (!v.ok()) return kInvalid;
  const LeonardSystemRep rep = build_split_form(p);
  const PolySeqBundle b = build_poly_bundle(p);
  const RecurrenceData r = recurrence_data(rep, p);
  auto seq = [](const std::vector<Poly>& ps) {
    json out = json::array();
    for (const auto& x : ps) out.push_back(json_io::poly_to_json(x));
    return out;
  };
  report["p"] = seq(b.p);
  report["p_star"] = seq(b.p_star);
  report["u"] = seq(b.u);
  report["u_star"] = seq(b.u_star);
  report["u_table"] = json_io::grid_to_json(u_table(b, p));
  report["recurrence"] = json{{"a", json_io::scalars_to_json(r.a)}, {"x", json_io::scalars_to_json(r.x)},
                              {"b", json_io::scalars_to_json(r.b)}, {"c", json_io::scalars_to_json(r.c)},
                              {"m", json_io::scalars_to_json(r.m)}, {"k", json_io::scalars_to_json(r.k)},
                              {"n", json_io::scalar_to_json(r.n)}};
  const bool orth = orthogonality_check(b, r, p).ok();
  const bool ident = check_poly_identities(b, r, rep, p).ok();
  report["orthogonality_holds"] = orth;
  report["identities_hold"] = ident;
  return orth && ident ? kOk : kInvalid;
}

struct QRacahArgs {
  int d = 0;
  std::string q, h = "1", hstar = "1", s = "1", sstar = "1", r1, r2, theta0 = "0", thetastar0 = "0";
  bool check = false;
};

int cmd_qracah(const QRacahArgs& a, const Options& opt, json& report) {
  const FieldSpec f = default_field(opt);
  auto sc = [&](const std::string& t) { return Scalar::parse(f, t); };
  QRacahInput in{a.d, sc(a.q), sc(a.h), sc(a.hstar), sc(a.r1), sc(a.r2), sc(a.s), sc(a.sstar), sc(a.theta0),
                 sc(a.thetastar0)};
  ParameterData p;
  try {
    p = qracah_params(in);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConstraintViolated && e.code() != ErrorCode::DivisionByZero) throw;
    report["error"] = std::string(to_string(e.code()));
    report["message"] = e.what();
    return kInvalid;
  }
  report["parameters"] = json_io::params_to_json(p);
  const ValidationReport v = validate_parameter_array(p);
  report["validation"] = json_io::validation_to_json(v);
  if (!v.ok()) return kInvalid;
  if (!a.check) return kOk;
  const auto table = u_table(build_poly_bundle(p), p);
  std::vector<std::vector<Scalar>> hyper;
  for (int i = 0; i <= a.d; ++i) {
    hyper.emplace_back();
    for (int j = 0; j <= a.d; ++j) hyper.back().push_back(qracah_u_value({i, j, in}));
  }
  report["u_table"] = json_io::grid_to_json(table);
  report["hypergeometric_table"] = json_io::grid_to_json(hyper);
  report["tables_match"] = table == hyper;
  return table == hyper ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for Leonard pairs and Leonard systems"};
  app.footer(kSchemaHelp);
  app.require_subcommand(1);
  Options opt;
  app.fallthrough();
  app.add_option("-o,--output", opt.output, "Write the report here instead of stdout");
  app.add_option("--field", opt.field, "Field for all inputs: rational | p:<prime>");

  std::string path;
  std::vector<std::string> paths;
  std::string preset, preset_q;
  QRacahArgs qa;

  auto* validate = app.add_subcommand("validate", "Check the classification conditions on a parameter file");
  validate->add_option("params", path, "Parameter JSON")->required();
  auto* build = app.add_subcommand("build", "Emit the split canonical form and its idempotents");
  build->add_option("params", path, "Parameter JSON")->required();
  auto* recognize = app.add_subcommand("recognize", "Decide whether (A, A*) is a Leonard pair");
  recognize->add_option("matrices", paths, "A.json A_star.json, or one file with A and A_star")->required();
  auto* relatives = app.add_subcommand("relatives", "Parameters of the eight relatives");
  relatives->add_option("params", path, "Parameter JSON")->required();
  auto* relations = app.add_subcommand("relations", "Verify the two tridiagonal relations");
  relations->add_option("params", path, "Parameter JSON")->required();
  relations->add_option("--preset", preset, "Use fixed scalars instead of computed ones")
      ->check(CLI::IsMember({"q-serre", "dolan-grady"}));
  relations->add_option("--q", preset_q, "q for the q-serre preset");
  auto* polys = app.add_subcommand("polys", "Polynomial sequences, recurrence data and orthogonality");
  polys->add_option("params", path, "Parameter JSON")->required();
  auto* qracah = app.add_subcommand("qracah", "Parameters of the q-Racah family");
  qracah->set_help_flag("--help", "Print this help message and exit");
  qracah->add_option("--d", qa.d, "Diameter")->required()->check(CLI::NonNegativeNumber);
  qracah->add_option("--q", qa.q, "q")->required();
  qracah->add_option("--h", qa.h, "h")->capture_default_str();
  qracah->add_option("--hstar", qa.hstar, "h*")->capture_default_str();
  qracah->add_option("--s", qa.s, "s")->capture_default_str();
  qracah->add_option("--sstar", qa.sstar, "s*")->capture_default_str();
  qracah->add_option("--r1", qa.r1, "r1")->required();
  qracah->add_option("--r2", qa.r2, "r2")->required();
  qracah->add_option("--theta0", qa.theta0, "theta_0")->capture_default_str();
  qracah->add_option("--thetastar0", qa.thetastar0, "theta*_0")->capture_default_str();
  qracah->add_flag("--check-4phi3", qa.check, "Compare u_i(theta_j) with the 4phi3 sum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << kSchemaHelp;
    return kUsage;
  }

  json report;
  int status = kOk;
  try {
    if (!opt.field.empty()) (void)FieldSpec::parse(opt.field);
    if (*validate) {
      report["command"] = "validate";
      status = cmd_validate(path, opt, report);
    } else if (*build) {
      report["command"] = "build";
      status = cmd_build(path, opt, report);
    } else if (*recognize) {
      report["command"] = "recognize";
      status = cmd_recognize(paths, opt, report);
    } else if (*relatives) {
      report["command"] = "relatives";
      status = cmd_relatives(path, opt, report);
    } else if (*relations) {
      report["command"] = "relations";
      status = cmd_relations(path, preset, preset_q, opt, report);
    } else if (*polys) {
      report["command"] = "polys";
      status = cmd_polys(path, opt, report);
    } else {
      report["command"] = "qracah";
      status = cmd_qracah(qa, opt, report);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << kSchemaHelp;
    return kUsage;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::SizeMismatch:
      case ErrorCode::FieldMismatch:
      case ErrorCode::DimensionMismatch:
      case ErrorCode::InvalidField:
        std::cerr << "error: " << e.what() << "\n" << kSchemaHelp;
        return kUsage;
      default:
        report["error"] = std::string(to_string(e.code()));
        report["message"] = e.what();
        status = kInvalid;
    }
  }

  const std::string text = json_io::dump(report);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output);
    if (!out) {
      std::cerr << "error: cannot write '" << opt.output << "'\n";
      return kUsage;
    }
    out << text;
  }
  return status;
}
