#include "tvs/json_io.hpp"

namespace tvs {

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("partition must be a JSON array of integers");
  std::vector<int> parts;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InvalidInput("partition must be a JSON array of integers");
    parts.push_back(e.get<int>());
  }
  return Partition(std::move(parts));
}

Json monomial_json(const Grading& g, const Monomial& m) {
  Json j = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) j[g.names()[i]] = m[i];
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["check"] = r.check;
  j["cap"] = r.cap;
  Json res = Json::array();
  for (const auto& [key, value] : r.residuals) res.push_back(Json::array({key, value}));
  j["residuals"] = std::move(res);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const MirrorCurve& mc) {
  auto list = [&](const std::vector<NovikovSeries<RatFunc>>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) {
      Json terms = Json::array();
      for (const auto& [m, v] : c.terms()) terms.push_back(Json::array({monomial_json(*mc.grading, m), v.to_string()}));
      a.push_back(std::move(terms));
    }
    return a;
  };
  Json j;
  j["parameters"] = mc.grading->names();
  j["classical"] = mc.classical_string();
  j["A"] = list(mc.a_coeffs);
  j["B"] = list(mc.b_coeffs);
  j["quantum"] = {{"A", list(mc.quantum_a_coeffs)}, {"B", list(mc.quantum_b_coeffs)}, {"convention", mc.shift_convention}};
  return j;
}

}  // namespace tvs
