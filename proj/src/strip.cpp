#include "tvs/strip.hpp"

#include <sstream>

#include "tvs/errors.hpp"
#include "tvs/numeric.hpp"

namespace tvs {

StripGeometry::StripGeometry(const std::string& word) {
  if (word.empty()) throw InvalidInput("strip word must be nonempty");
  for (char c : word) {
    if (c == 'A')
      types_.push_back(VertexType::A);
    else if (c == 'B')
      types_.push_back(VertexType::B);
    else
      throw InvalidInput(std::string("strip word may only contain A and B, got '") + c + "'");
  }
  if (types_[0] != VertexType::A) throw InvalidInput("first vertex of a strip must be of type A");
}

std::string StripGeometry::word() const {
  std::string s;
  for (auto t : types_) s += t == VertexType::A ? 'A' : 'B';
  return s;
}

std::vector<std::string> StripGeometry::kahler_names() const {
  std::vector<std::string> names;
  for (int i = 1; i < size(); ++i) names.push_back("Q_" + std::to_string(i));
  return names;
}

GradingPtr StripGeometry::grading(int cap, int q_weight) const {
  auto names = kahler_names();
  std::vector<int> w(names.size(), q_weight);
  return Grading::make(std::move(names), std::move(w), cap);
}

Monomial StripGeometry::q_path(int i, int j) const {
  Monomial m(static_cast<std::size_t>(size() - 1), 0);
  for (int l = i; l < j; ++l) m[static_cast<std::size_t>(l - 1)] += 1;
  return m;
}

StripParams strip_params(const StripGeometry& strip) {
  StripParams p;
  for (int k = 1; k <= strip.size(); ++k)
    (strip.type(k) == VertexType::A ? p.alphas : p.betas).push_back(strip.q_path(1, k));
  return p;
}

std::vector<NovikovSeries<RatFunc>> elementary_expansion(const GradingPtr& g, const std::vector<Monomial>& ms) {
  std::vector<NovikovSeries<RatFunc>> c{NovikovSeries<RatFunc>::constant(g, RatFunc(1))};
  for (const auto& m : ms) {
    NovikovSeries<RatFunc> shift(g);
    shift.add_term(m, RatFunc(-1));
    c.push_back(NovikovSeries<RatFunc>(g));
    for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] += c[i - 1] * shift;
  }
  return c;
}

MirrorCurve mirror_and_quantum(const StripGeometry& strip) {
  // Q-degrees here are bounded by the strip, so the cap never truncates.
  MirrorCurve mc;
  mc.grading = strip.grading(strip.size() * strip.size());
  const StripParams p = strip_params(strip);
  mc.a_coeffs = elementary_expansion(mc.grading, p.alphas);
  mc.b_coeffs = elementary_expansion(mc.grading, p.betas);
  for (std::size_t i = 0; i < mc.a_coeffs.size(); ++i)
    mc.quantum_a_coeffs.push_back(mc.a_coeffs[i] * RatFunc::t_pow(static_cast<int>(i)));
  for (std::size_t j = 0; j < mc.b_coeffs.size(); ++j)
    mc.quantum_b_coeffs.push_back(mc.b_coeffs[j] * RatFunc::t_pow(static_cast<int>(j)));
  return mc;
}

NovikovSeries<RatFunc> at_q_one(const NovikovSeries<RatFunc>& s) {
  return s.map<RatFunc>([](const RatFunc& c) {
    const NumScalar v = eval_t(c, Rational(1));
    RatFunc r;
    const Laurent& p = v.in_a();
    for (int e = p.low(); !p.is_zero() && e <= p.high(); ++e)
      if (p.coeff(e) != 0) r += RatFunc::a_pow(e) * RatFunc(p.coeff(e));
    return r;
  });
}

namespace {

std::string poly_string(const GradingPtr& g, const std::vector<NovikovSeries<RatFunc>>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (const auto& [m, c] : coeffs[i].terms()) {
      std::string coef = c.to_string();
      const bool neg = !coef.empty() && coef[0] == '-';
      if (neg) coef = coef.substr(1);
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      std::string body;
      if (coef != "1") body = coef;
      const std::string mono = g->monomial_string(m);
      if (mono != "1") body += (body.empty() ? "" : "*") + mono;
      if (i > 0) body += (body.empty() ? "" : "*") + std::string("x") + (i > 1 ? "^" + std::to_string(i) : "");
      os << (body.empty() ? "1" : body);
    }
  return first ? "0" : os.str();
}

}  // namespace

std::string MirrorCurve::classical_string() const {
  const std::string b = poly_string(grading, b_coeffs);
  const bool bare = b.find(' ') == std::string::npos;
  return "y*(" + poly_string(grading, a_coeffs) + ") + " + (bare ? b : "(" + b + ")");
}

}  // namespace tvs
