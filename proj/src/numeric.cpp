#include "tvs/numeric.hpp"

#include "tvs/errors.hpp"

namespace tvs {

NumScalar& NumScalar::operator*=(const NumScalar& o) {
  if (o.p_.is_constant()) {
    p_ *= o.p_.coeffs()[0];
  } else {
    p_ *= o.p_;
  }
  return *this;
}

NumScalar& NumScalar::operator/=(const NumScalar& o) {
  if (o.p_.is_zero()) throw DivisionByZero();
  if (!o.p_.is_monomial()) throw NonInvertibleDenominator(o.to_string());
  p_ = p_.shifted(-o.p_.low());
  p_ *= Rational(1) / o.p_.coeffs()[0];
  return *this;
}

NumScalar eval_t(const RatFunc& s, const Rational& t_value) {
  if (t_value == 0) throw PoleAtEvaluationPoint("t = 0");
  if (s.is_zero()) return {};
  const Rational den = s.denominator().eval(t_value);
  if (den == 0) throw PoleAtEvaluationPoint(s.to_string() + " at t = " + t_value.get_str());
  Laurent out;
  for (const auto& [ae, p] : s.numerator()) out += Laurent::monomial(ae, p.eval(t_value) / den);
  return NumScalar(std::move(out));
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q <= 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

NumScalar eval_q(const RatFunc& s, const Rational& q_value) {
  auto t = rational_sqrt(q_value);
  if (!t) throw InvalidInput("q = " + q_value.get_str() + " is not the square of a positive rational");
  return eval_t(s, *t);
}

}  // namespace tvs
