// tvs: strip partition functions, skein dilogarithm and quantum curve checks.
//
//   tvs --command closed-form --spec strip.json --out result.json
//   tvs --command verify-dilog --cap 6
//
// Exit status: 0 success or verification pass, 1 verification failure,
// 2 malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tvs/json_io.hpp"
#include "tvs/qdiff.hpp"
#include "tvs/skein.hpp"
#include "tvs/vertex.hpp"

namespace {

using tvs::Json;

struct JobSpec {
  std::string command;
  std::optional<std::string> types;
  int cap = 4;
  bool numeric = false;
  tvs::Rational q_value;
  tvs::Branes branes = tvs::Branes::Two;
};

struct Outcome {
  Json body;
  bool pass = true;
};

tvs::Rational parse_rational(const std::string& s) {
  tvs::Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw tvs::InvalidInput("not a rational number: " + s);
  r.canonicalize();
  return r;
}

JobSpec load_spec(const std::string& path) {
  JobSpec spec;
  if (path.empty()) return spec;
  std::ifstream in(path);
  if (!in) throw tvs::InvalidInput("cannot open spec file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw tvs::InvalidInput(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw tvs::InvalidInput("spec must be a JSON object");
  try {
    if (j.contains("types")) spec.types = j.at("types").get<std::string>();
    if (j.contains("truncation")) spec.cap = j.at("truncation").get<int>();
    if (j.contains("q_mode")) {
      const auto mode = j.at("q_mode").get<std::string>();
      if (mode != "symbolic" && mode != "numeric") throw tvs::InvalidInput("q_mode must be symbolic or numeric");
      spec.numeric = mode == "numeric";
    }
    if (j.contains("q_value")) {
      const auto& v = j.at("q_value");
      spec.q_value = v.is_string() ? parse_rational(v.get<std::string>()) : tvs::Rational(v.get<long>());
    }
    if (j.contains("branes")) {
      const auto b = j.at("branes").get<std::string>();
      if (b != "one" && b != "two") throw tvs::InvalidInput("branes must be one or two");
      spec.branes = b == "one" ? tvs::Branes::One : tvs::Branes::Two;
    }
  } catch (const Json::exception& e) {
    throw tvs::InvalidInput(std::string("malformed spec field: ") + e.what());
  }
  if (spec.numeric && !j.contains("q_value")) throw tvs::InvalidInput("numeric q_mode requires q_value");
  return spec;
}

Json difference_report(const std::string& check, int cap, const Json& diff_terms, bool pass) {
  Json j;
  j["check"] = check;
  j["cap"] = cap;
  j["residuals"] = diff_terms;
  j["pass"] = pass;
  return j;
}

template <class Field>
Outcome run_strip(const Field& field, const JobSpec& spec) {
  if (!spec.types) throw tvs::InvalidInput("command " + spec.command + " needs strip types");
  const tvs::StripGeometry strip(*spec.types);
  const int cap = spec.cap;
  Outcome out;
  if (spec.command == "vertex") {
    out.body = tvs::to_json(tvs::glue_strip(field, strip, cap, spec.branes));
  } else if (spec.command == "partition") {
    out.body = tvs::to_json(tvs::z_open(tvs::glue_strip(field, strip, cap, spec.branes)));
  } else if (spec.command == "closed-form") {
    out.body = tvs::to_json(tvs::closed_form(field, strip, cap));
  } else if (spec.command == "verify-thm53") {
    const auto diff = tvs::z_open(tvs::glue_strip(field, strip, cap)) - tvs::closed_form(field, strip, cap);
    out.pass = diff.is_zero();
    out.body = difference_report("strip-closed-form", cap, tvs::to_json(diff)["terms"], out.pass);
  } else if (spec.command == "verify-quantum-curve") {
    const auto route = std::is_same_v<Field, tvs::SymbolicQ> ? tvs::U1Route::Full : tvs::U1Route::Factorwise;
    const auto rep = tvs::verify_annihilation(field, strip, cap, route);
    const bool log_ok = tvs::log_reduce(field, strip, cap) == tvs::reduced_solution(field, strip, cap, route);
    out.pass = rep.pass && log_ok;
    out.body = tvs::to_json(rep);
    out.body["log_reduce_agrees"] = log_ok;
    out.body["pass"] = out.pass;
  } else {
    throw tvs::InvalidInput("unknown command " + spec.command);
  }
  return out;
}

template <class Field>
Outcome run_prop52(const Field& field, int cap) {
  const auto diff = tvs::two_leg_vertex_series(field, cap) - tvs::two_leg_product_formula(field, cap);
  Outcome out;
  out.pass = diff.is_zero();
  out.body = difference_report("two-leg-vertex", cap, tvs::to_json(diff)["terms"], out.pass);
  return out;
}

Outcome run(const JobSpec& spec) {
  if (spec.cap < 0) throw tvs::InvalidInput("truncation must be non-negative");
  const std::string& c = spec.command;
  Outcome out;
  if (c == "verify-dilog") {
    Json reports = Json::array();
    for (auto which : {tvs::Recurrence::Forward, tvs::Recurrence::Inverse}) {
      const auto rep = tvs::verify_dilog_recurrence(spec.cap, which);
      out.pass = out.pass && rep.pass;
      reports.push_back(tvs::to_json(rep));
    }
    out.body["reports"] = std::move(reports);
    out.body["pass"] = out.pass;
  } else if (c == "mirror-curve") {
    if (!spec.types) throw tvs::InvalidInput("mirror-curve needs strip types");
    out.body = tvs::to_json(tvs::mirror_and_quantum(tvs::StripGeometry(*spec.types)));
  } else if (c == "verify-prop52") {
    out = spec.numeric ? run_prop52(tvs::NumericQ::from_q(spec.q_value), spec.cap) : run_prop52(tvs::SymbolicQ{}, spec.cap);
  } else if (c == "vertex" || c == "partition" || c == "closed-form" || c == "verify-thm53" ||
             c == "verify-quantum-curve") {
    out = spec.numeric ? run_strip(tvs::NumericQ::from_q(spec.q_value), spec) : run_strip(tvs::SymbolicQ{}, spec);
  } else {
    throw tvs::InvalidInput("unknown command " + c);
  }
  Json wrapped;
  wrapped["command"] = c;
  if (spec.types) wrapped["types"] = *spec.types;
  wrapped["truncation"] = spec.cap;
  wrapped["q_mode"] = spec.numeric ? "numeric" : "symbolic";
  if (spec.numeric) wrapped["q_value"] = spec.q_value.get_str();
  wrapped["result"] = std::move(out.body);
  out.body = std::move(wrapped);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strip partition functions, skein dilogarithm and quantum curve checks"};
  std::string spec_path, command, out_path, numeric_q, types;
  std::optional<int> cap;
  app.add_option("--spec", spec_path, "strip specification (JSON)");
  app.add_option("--command", command, "vertex | partition | closed-form | verify-dilog | verify-prop52 | "
                                         "verify-thm53 | verify-quantum-curve | mirror-curve")
      ->required();
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--cap", cap, "truncation order (overrides the spec file)");
  app.add_option("--numeric-q", numeric_q, "evaluate at this rational q, which must be a square, e.g. 9/4");
  app.add_option("--types", types, "strip word such as AB (overrides the spec file)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Outcome outcome;
  try {
    JobSpec spec = load_spec(spec_path);
    spec.command = command;
    if (cap) spec.cap = *cap;
    if (!types.empty()) spec.types = types;
    if (!numeric_q.empty()) {
      spec.numeric = true;
      spec.q_value = parse_rational(numeric_q);
    }
    if (spec.numeric) tvs::NumericQ::from_q(spec.q_value);  // validate early
    outcome = run(spec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "tvs: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "tvs: " << e.what() << "\n";
    return 2;
  }

  const std::string text = outcome.body.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "tvs: cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return outcome.pass ? 0 : 1;
}
