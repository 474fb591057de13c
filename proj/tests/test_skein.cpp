#include <doctest.h>

#include "tvs/skein.hpp"

using namespace tvs;

namespace {

const RatFunc z = quantum_integer(1);
const RatFunc a = RatFunc::a_pow(1);
const RatFunc ai = RatFunc::a_pow(-1);

// f with a replaced by t^k.
RatFunc a_to_t_power(const RatFunc& f, int k) {
  Laurent num;
  for (const auto& [e, p] : f.numerator()) num += p.shifted(k * e);
  return RatFunc::from_laurent_t(num) / RatFunc::from_laurent_t(f.denominator());
}

RatFunc coef(const SymFunc<RatFunc>& f, const Partition& l, const Monomial& m) {
  return f.coefficient(SymKey{{l}, m});
}

}  // namespace

TEST_CASE("unknot") {
  CHECK(unknot_value() == (a - ai) / z);
  CHECK(a_to_t_power(unknot_value(), 0).is_zero());
  CHECK(a_to_t_power(unknot_value(), 1) == RatFunc(1));
}

TEST_CASE("meridian eigenvalues") {
  CHECK(meridian_eigenvalue(Partition(), Orientation::Positive) == unknot_value());
  CHECK(meridian_eigenvalue(Partition(), Orientation::Negative) == unknot_value());
  CHECK(meridian_eigenvalue({1}, Orientation::Positive) == unknot_value() + z * a);
  CHECK(meridian_eigenvalue({1}, Orientation::Negative) == unknot_value() - z * ai);
  // C_(2,1)(q) = 1 + q + q^{-1}
  const RatFunc c21 = RatFunc(1) + RatFunc::t_pow(2) + RatFunc::t_pow(-2);
  CHECK(content_polynomial({2, 1}) == c21);
  CHECK(meridian_eigenvalue({2, 1}, Orientation::Negative) == unknot_value() - z * ai * c21);
}

TEST_CASE("skein dilogarithm coefficients") {
  const auto g = dilog_grading(6);
  const Monomial xi = g->unit("xi");
  const auto f = psi(g, xi);
  CHECK(coef(f, Partition(), g->zero()) == RatFunc(1));
  CHECK(coef(f, {1}, {1}) == -RatFunc(1) / z);
  CHECK(coef(f, {2}, {2}) == RatFunc::t_pow(-1) / (z * quantum_integer(2)));
  const auto fi = psi_inverse(g, xi);
  CHECK(coef(fi, Partition(), g->zero()) == RatFunc(1));
  CHECK(coef(fi, {1}, {1}) == RatFunc(1) / z);
  // only xi^{|lambda|} appears
  for (const auto& [k, c] : f.terms()) CHECK(k.mono[0] == k.slots[0].size());
}

TEST_CASE("inverse") {
  const auto g = dilog_grading(6);
  const Monomial xi = g->unit("xi");
  CHECK(mul(psi(g, xi), psi_inverse(g, xi)) == SymFunc<RatFunc>::one(g, {1}, Basis::Schur));
}

TEST_CASE("product and exponential forms agree") {
  const auto g = dilog_grading(6);
  const Monomial xi = g->unit("xi");
  CHECK(psi(g, xi, PsiForm::Product) == psi(g, xi, PsiForm::Exponential));
  CHECK(psi_inverse(g, xi, PsiForm::Product) == psi_inverse(g, xi, PsiForm::Exponential));
}

TEST_CASE("recurrence at low order") {
  for (int cap : {0, 1, 3})
    for (auto which : {Recurrence::Forward, Recurrence::Inverse}) {
      const auto rep = verify_dilog_recurrence(cap, which);
      CHECK(rep.pass);
      CHECK(rep.residuals.size() == enumerate_partitions(cap).size());
      for (const auto& [key, value] : rep.residuals) CHECK(value == "0");
    }
  CHECK(verify_dilog_recurrence(1, Recurrence::Forward).check == "dilog-recurrence");
  CHECK(verify_dilog_recurrence(1, Recurrence::Inverse).check == "dilog-inverse-recurrence");
  // one box by hand: [unknot - ev((1),+)] c_(1) - a xi c_empty with c_(1) = -xi/{1}
  const RatFunc c1 = -RatFunc(1) / z;
  CHECK((unknot_value() - meridian_eigenvalue({1}, Orientation::Positive)) * c1 - a == RatFunc());
}

TEST_CASE("recursion solution matches the product form") {
  const int cap = 8;
  const auto g = dilog_grading(cap);
  const Monomial xi = g->unit("xi");
  const auto fwd = solve_dilog_recursion(cap, Recurrence::Forward);
  const auto inv = solve_dilog_recursion(cap, Recurrence::Inverse);
  const auto f = psi(g, xi);
  const auto fi = psi_inverse(g, xi);
  CHECK(fwd.size() == enumerate_partitions(cap).size());
  for (const auto& l : enumerate_partitions(cap)) {
    CHECK(fwd.at(l) == coef(f, l, {l.size()}));
    CHECK(inv.at(l) == coef(fi, l, {l.size()}));
  }
}

TEST_CASE("solutions from strip data") {
  const auto g = Grading::make({"Q"}, 4);
  const Monomial one = g->zero();
  const Monomial Q = g->unit("Q");
  const auto c3 = solution_Z({one}, {}, g);
  CHECK(c3.coefficient(std::vector<Partition>{{1}}).constant_term() == -RatFunc(1) / z);
  const auto conifold = solution_Z({one}, {Q}, g);
  const auto s1 = conifold.coefficient(std::vector<Partition>{{1}});
  CHECK(s1.coefficient(one) == -RatFunc(1) / z);
  CHECK(s1.coefficient(Q) == RatFunc(1) / z);
  CHECK(s1.size() == 2);
  CHECK(solution_Z({}, {}, g) == SymFunc<RatFunc>::one(g, {1}, Basis::Schur));
  CHECK(solution_Z({one}, {Q}, g, Basis::Power) == convert(conifold, Basis::Power));
}
