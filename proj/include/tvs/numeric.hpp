#pragma once

#include <string>

#include "tvs/laurent.hpp"
#include "tvs/ratfunc.hpp"

namespace tvs {

/// A scalar after q has been fixed to a rational value: a Laurent polynomial
/// in a with rational coefficients. Only a-monomials are invertible.
class NumScalar {
 public:
  NumScalar() = default;
  NumScalar(const Rational& c) : p_(c) {}  // NOLINT
  NumScalar(long c) : p_(Rational(c)) {}
  explicit NumScalar(Laurent in_a) : p_(std::move(in_a)) {}

  bool is_zero() const { return p_.is_zero(); }
  const Laurent& in_a() const { return p_; }

  NumScalar& operator+=(const NumScalar& o) { p_ += o.p_; return *this; }
  NumScalar& operator-=(const NumScalar& o) { p_ -= o.p_; return *this; }
  NumScalar& operator*=(const NumScalar& o);
  NumScalar& operator/=(const NumScalar& o);
  NumScalar operator-() const { return NumScalar(-p_); }

  friend NumScalar operator+(NumScalar x, const NumScalar& y) { return x += y; }
  friend NumScalar operator-(NumScalar x, const NumScalar& y) { return x -= y; }
  friend NumScalar operator*(NumScalar x, const NumScalar& y) { return x *= y; }
  friend NumScalar operator/(NumScalar x, const NumScalar& y) { return x /= y; }
  friend bool operator==(const NumScalar& x, const NumScalar& y) { return x.p_ == y.p_; }

  std::string to_string() const { return p_.to_string("a"); }

 private:
  Laurent p_;
};

/// Evaluates s at t = t_value, leaving a symbolic.
NumScalar eval_t(const RatFunc& s, const Rational& t_value);
/// Evaluates s at q = q_value; q_value must be the square of a nonzero rational.
NumScalar eval_q(const RatFunc& s, const Rational& q_value);
/// Positive rational square root, if q is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace tvs
