#pragma once

#include <json.hpp>

#include "tvs/partition.hpp"
#include "tvs/qdiff.hpp"
#include "tvs/report.hpp"
#include "tvs/strip.hpp"
#include "tvs/symfunc.hpp"

namespace tvs {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json to_json(const Report& r);
Json to_json(const MirrorCurve& mc);

/// {"Q_1": 2, ...} with zero exponents omitted, names in grading order.
Json monomial_json(const Grading& g, const Monomial& m);

/// {"basis", "slots", "parameters", "cap", "terms": [[[l_1], ..., {mono}, "coef"], ...]}
/// with terms in key order.
template <class S>
Json to_json(const SymFunc<S>& f) {
  Json j;
  j["basis"] = f.basis() == Basis::Schur ? "schur" : "power";
  j["slots"] = f.arity();
  j["parameters"] = f.grading()->names();
  j["cap"] = f.cap();
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    Json t = Json::array();
    for (const auto& p : k.slots) t.push_back(to_json(p));
    t.push_back(monomial_json(*f.grading(), k.mono));
    t.push_back(c.to_string());
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

/// {"cap", "parameters", "coefficients": [[d, {mono}, "coef"], ...]}
template <class S>
Json to_json(const QSeries<S>& f) {
  Json j;
  j["cap"] = f.cap();
  j["parameters"] = f.grading()->names();
  Json cs = Json::array();
  for (int d = 0; d <= f.cap(); ++d)
    for (const auto& [m, c] : f[d].terms()) cs.push_back(Json::array({d, monomial_json(*f.grading(), m), c.to_string()}));
  j["coefficients"] = std::move(cs);
  return j;
}

}  // namespace tvs
