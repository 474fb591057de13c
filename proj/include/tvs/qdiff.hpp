#pragma once

#include <vector>

#include "tvs/field.hpp"
#include "tvs/report.hpp"
#include "tvs/skein.hpp"
#include "tvs/strip.hpp"
#include "tvs/symfunc.hpp"

namespace tvs {

/// Power series in one variable x, coefficients of x^0..x^cap in the formal
/// parameters of a grading.
template <class S>
class QSeries {
 public:
  using Coef = NovikovSeries<S>;

  QSeries(GradingPtr g, int cap) : g_(std::move(g)), c_(static_cast<std::size_t>(cap) + 1, Coef(g_)) {}

  static QSeries one(GradingPtr g, int cap) {
    QSeries r(std::move(g), cap);
    r.c_[0] = Coef::constant(r.g_, S(1));
    return r;
  }

  const GradingPtr& grading() const { return g_; }
  int cap() const { return static_cast<int>(c_.size()) - 1; }
  const Coef& operator[](int d) const { return c_[static_cast<std::size_t>(d)]; }
  Coef& operator[](int d) { return c_[static_cast<std::size_t>(d)]; }

  QSeries& operator+=(const QSeries& o) {
    for (int d = 0; d <= cap(); ++d) (*this)[d] += o[d];
    return *this;
  }
  QSeries& operator-=(const QSeries& o) {
    for (int d = 0; d <= cap(); ++d) (*this)[d] -= o[d];
    return *this;
  }
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(a.g_, a.cap());
    for (int i = 0; i <= a.cap(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= a.cap(); ++j)
        if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

 private:
  GradingPtr g_;
  std::vector<Coef> c_;
};

/// Algebra map p_lambda -> x^{|lambda|} on one-slot SymFuncs; the x-cap is the
/// SymFunc cap (slot weight 1).
template <class S>
QSeries<S> u1_reduce(const SymFunc<S>& f) {
  if (f.arity() != 1) throw InvalidInput("u1_reduce expects a one-slot element");
  const auto pf = convert(f, Basis::Power);
  QSeries<S> r(f.grading(), f.cap());
  for (const auto& [k, c] : pf.terms())
    if (k.slots[0].size() <= r.cap()) r[k.slots[0].size()].add_term(k.mono, c);
  return r;
}

/// x^d -> q^d x^d.
template <class Field>
QSeries<typename Field::scalar> sigma_q(const Field& field, const QSeries<typename Field::scalar>& f) {
  QSeries<typename Field::scalar> r = f;
  for (int d = 1; d <= f.cap(); ++d) r[d] *= field.t_pow(2 * d);
  return r;
}

/// sum_i c_i x^i from a coefficient list, each coefficient multiplied by t^{i}
/// when `quantum`.
template <class Field>
QSeries<typename Field::scalar> x_polynomial(const Field& field, const GradingPtr& g, int cap,
                                            const std::vector<NovikovSeries<RatFunc>>& coeffs, bool quantum) {
  using S = typename Field::scalar;
  QSeries<S> r(g, cap);
  for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= cap; ++i)
    for (const auto& [m, c] : coeffs[i].terms()) {
      S v = field.lift(c);
      if (quantum) v *= field.t_pow(static_cast<int>(i));
      r[static_cast<int>(i)].add_term(m, v);
    }
  return r;
}

/// Grading for the U(1) reduction of a strip: Q_i of weight 0, so the x-cap
/// alone truncates and Q-dependence is exact.
inline GradingPtr u1_grading(const StripGeometry& strip, int cap) { return strip.grading(cap, 0); }

/// u1_reduce(Psi[xi]) = sum_n (-1)^n t^{-n(n-1)/2} xi^n x^n / prod_{h<=n} {h},
/// and for the inverse t^{n(n-1)/2} xi^n x^n / prod {h}; only one-row shapes survive.
template <class Field>
QSeries<typename Field::scalar> u1_psi(const Field& field, const GradingPtr& g, int cap, const Monomial& xi,
                                       bool inverse) {
  using S = typename Field::scalar;
  QSeries<S> r(g, cap);
  RatFunc c(1);
  for (int n = 0; n <= cap; ++n) {
    if (n > 0) {
      c /= quantum_integer(n);
      c *= RatFunc::t_pow(inverse ? n - 1 : -(n - 1));
      if (!inverse) c = -c;
    }
    Monomial m = xi;
    for (auto& e : m) e *= n;
    r[n].add_term(m, field.lift(c));
  }
  return r;
}

enum class U1Route { Full, Factorwise };

/// z(x) = u1_reduce(solution_Z(alphas, betas)). The full route multiplies the
/// skein elements in Lambda first; the factorwise route multiplies the reduced
/// factors, which agrees because u1_reduce is an algebra map.
template <class Field>
QSeries<typename Field::scalar> reduced_solution(const Field& field, const StripGeometry& strip, int cap,
                                                 U1Route route) {
  const auto g = u1_grading(strip, cap);
  const auto p = strip_params(strip);
  if (route == U1Route::Full) {
    const auto z = solution_Z(p.alphas, p.betas, g, Basis::Power);
    return u1_reduce(z.template map_coefficients<typename Field::scalar>([&](const RatFunc& c) { return field.lift(c); }));
  }
  auto z = QSeries<typename Field::scalar>::one(g, cap);
  for (const auto& a : p.alphas) z = z * u1_psi(field, g, cap, a, false);
  for (const auto& b : p.betas) z = z * u1_psi(field, g, cap, b, true);
  return z;
}

/// Re-reads coefficient series under another grading with the same parameters.
inline std::vector<NovikovSeries<RatFunc>> regrade(const std::vector<NovikovSeries<RatFunc>>& cs, const GradingPtr& g) {
  std::vector<NovikovSeries<RatFunc>> out;
  for (const auto& c : cs) {
    NovikovSeries<RatFunc> r(g);
    for (const auto& [m, v] : c.terms()) r.add_term(m, v);
    out.push_back(std::move(r));
  }
  return out;
}

/// Residual sigma_q(z) prod_j (1 - t beta_j x) - z prod_i (1 - t alpha_i x).
template <class Field>
QSeries<typename Field::scalar> annihilation_residual(const Field& field, const StripGeometry& strip,
                                                      const QSeries<typename Field::scalar>& z) {
  const auto mc = mirror_and_quantum(strip);
  const auto g = z.grading();
  const auto pa = x_polynomial(field, g, z.cap(), regrade(mc.a_coeffs, g), true);
  const auto pb = x_polynomial(field, g, z.cap(), regrade(mc.b_coeffs, g), true);
  return sigma_q(field, z) * pb - z * pa;
}

template <class Field>
Report verify_annihilation(const Field& field, const StripGeometry& strip, int cap, U1Route route) {
  const auto r = annihilation_residual(field, strip, reduced_solution(field, strip, cap, route));
  Report rep;
  rep.check = "quantum-curve-annihilation";
  rep.cap = cap;
  for (int d = 0; d <= cap; ++d) rep.add({d}, r[d].to_string(), r[d].is_zero());
  return rep;
}

/// exp(-sum_d (sum_i alpha_i^d - sum_j beta_j^d) x^d / (d {d})) by the
/// recurrence n E_n = sum_k k L_k E_{n-k}.
template <class Field>
QSeries<typename Field::scalar> log_reduce(const Field& field, const StripGeometry& strip, int cap) {
  using S = typename Field::scalar;
  const auto g = u1_grading(strip, cap);
  const auto p = strip_params(strip);
  QSeries<S> l(g, cap);
  for (int d = 1; d <= cap; ++d) {
    const S c = field.lift(RatFunc(frac(-1, d)) / quantum_integer(d));
    auto add = [&](const Monomial& m, const S& v) {
      Monomial md = m;
      for (auto& e : md) e *= d;
      l[d].add_term(md, v);
    };
    for (const auto& a : p.alphas) add(a, c);
    for (const auto& b : p.betas) add(b, -c);
  }
  auto e = QSeries<S>::one(g, cap);
  for (int n = 1; n <= cap; ++n) {
    NovikovSeries<S> acc(g);
    for (int k = 1; k <= n; ++k) acc += l[k] * e[n - k] * S(Rational(static_cast<long>(k)));
    e[n] = acc * S(frac(1, n));
  }
  return e;
}

}  // namespace tvs
