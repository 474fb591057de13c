#include "tvs/skein.hpp"

#include "tvs/field.hpp"

namespace tvs {

namespace {

Monomial power(const Monomial& m, int k) {
  Monomial r = m;
  for (auto& e : r) e *= k;
  return r;
}

SymFunc<RatFunc> psi_product(const GradingPtr& g, const Monomial& xi, bool inverse) {
  SymFunc<RatFunc> r(g, 1, Basis::Schur);
  for (int n = 0;; ++n) {
    const Monomial m = power(xi, n);
    if (n + g->degree(m) > g->cap()) break;
    for (const auto& lambda : partitions_of(n)) {
      int content_sum = 0;
      RatFunc den(1);
      for (const auto& cell : hooks_and_contents(lambda)) {
        content_sum += cell.content;
        den *= quantum_integer(cell.hook);
      }
      RatFunc c = inverse ? RatFunc::t_pow(content_sum) : RatFunc::t_pow(-content_sum);
      if (!inverse && n % 2) c = -c;
      c /= den;
      r.add_term(SymKey{{lambda}, m}, c);
    }
  }
  return r;
}

SymFunc<RatFunc> psi_exponential(const GradingPtr& g, const Monomial& xi, bool inverse) {
  RatFunc c = RatFunc(1) / quantum_integer(1);
  if (!inverse) c = -c;
  const auto arg = SymFunc<RatFunc>::basis_element(g, {1}, Basis::Power, {Partition{1}}, c, xi);
  return convert(plethystic_exp(SymbolicQ{}, arg, PlethysticVariant::Exp), Basis::Schur);
}

}  // namespace

RatFunc content_polynomial(const Partition& lambda) {
  RatFunc c;
  for (const auto& cell : hooks_and_contents(lambda)) c += RatFunc::t_pow(2 * cell.content);
  return c;
}

RatFunc unknot_value() { return (RatFunc::a_pow(1) - RatFunc::a_pow(-1)) / quantum_integer(1); }

RatFunc meridian_eigenvalue(const Partition& lambda, Orientation o) {
  const RatFunc z = quantum_integer(1);
  if (o == Orientation::Positive) return unknot_value() + z * RatFunc::a_pow(1) * content_polynomial(lambda);
  return unknot_value() - z * RatFunc::a_pow(-1) * content_polynomial(lambda).substitute(-1, 1);
}

GradingPtr dilog_grading(int cap) { return Grading::make({"xi"}, {0}, cap); }

SymFunc<RatFunc> psi(const GradingPtr& g, const Monomial& xi, PsiForm form) {
  return form == PsiForm::Product ? psi_product(g, xi, false) : psi_exponential(g, xi, false);
}

SymFunc<RatFunc> psi_inverse(const GradingPtr& g, const Monomial& xi, PsiForm form) {
  return form == PsiForm::Product ? psi_product(g, xi, true) : psi_exponential(g, xi, true);
}

Report verify_dilog_recurrence(int cap, Recurrence which) {
  const bool fwd = which == Recurrence::Forward;
  const auto g = dilog_grading(cap);
  const Monomial xi = g->unit("xi");
  const auto f = fwd ? psi(g, xi) : psi_inverse(g, xi);
  const Orientation o = fwd ? Orientation::Positive : Orientation::Negative;

  SymFunc<RatFunc> res = f * unknot_value();
  SymFunc<RatFunc> meridian(g, 1, Basis::Schur);
  for (const auto& [k, c] : f.terms()) meridian.add_term(k, c * meridian_eigenvalue(k.slots[0], o));
  res -= meridian;
  const auto s1 = SymFunc<RatFunc>::basis_element(g, {1}, Basis::Schur, {Partition{1}});
  NovikovSeries<RatFunc> coef(g);
  coef.add_term(xi, RatFunc::a_pow(fwd ? 1 : -1));
  res -= mul(s1, f).times_series(coef);

  Report rep;
  rep.check = fwd ? "dilog-recurrence" : "dilog-inverse-recurrence";
  rep.cap = cap;
  for (const auto& lambda : enumerate_partitions(cap)) {
    const auto r = res.coefficient(std::vector<Partition>{lambda});
    rep.add(lambda.parts(), r.to_string(), r.is_zero());
  }
  return rep;
}

std::map<Partition, RatFunc> solve_dilog_recursion(int cap, Recurrence which) {
  const bool fwd = which == Recurrence::Forward;
  std::map<Partition, RatFunc> c;
  c.emplace(Partition(), RatFunc(1));
  const RatFunc z = quantum_integer(1);
  for (int n = 1; n <= cap; ++n) {
    const auto& ps = partitions_of(n);
    std::vector<RatFunc> out(ps.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < ps.size(); ++i) {
      RatFunc sum;
      for (const auto& mu : box_moves(ps[i], BoxMove::Remove)) sum += c.at(mu);
      RatFunc cp = content_polynomial(ps[i]);
      if (!fwd) cp = cp.substitute(-1, 1);
      RatFunc v = fwd ? -sum : sum;
      v /= z * cp;
      out[i] = std::move(v);
    }
    for (std::size_t i = 0; i < ps.size(); ++i) c.emplace(ps[i], std::move(out[i]));
  }
  return c;
}

SymFunc<RatFunc> solution_Z(const std::vector<Monomial>& alphas, const std::vector<Monomial>& betas,
                            const GradingPtr& g, Basis basis) {
  auto z = SymFunc<RatFunc>::one(g, {1}, Basis::Power);
  for (const auto& a : alphas) z = mul(z, psi(g, a));
  for (const auto& b : betas) z = mul(z, psi_inverse(g, b));
  return convert(z, basis);
}

}  // namespace tvs
