#pragma once

#include "tvs/errors.hpp"
#include "tvs/numeric.hpp"
#include "tvs/ratfunc.hpp"

namespace tvs {

/// Coefficient context with q kept symbolic.
struct SymbolicQ {
  using scalar = RatFunc;
  scalar t_pow(int k) const { return RatFunc::t_pow(k); }
  scalar quantum_integer(int n) const { return tvs::quantum_integer(n); }
  scalar lift(const RatFunc& s) const { return s; }
};

/// Coefficient context with t = q^{1/2} fixed to a rational value.
/// Identities verified here hold at that value of q only.
struct NumericQ {
  using scalar = NumScalar;
  Rational t;

  static NumericQ from_q(const Rational& q);

  scalar t_pow(int k) const;
  scalar quantum_integer(int n) const { return t_pow(n) - t_pow(-n); }
  scalar lift(const RatFunc& s) const { return eval_t(s, t); }
};

inline NumericQ NumericQ::from_q(const Rational& q) {
  auto root = rational_sqrt(q);
  if (!root) throw InvalidInput("numeric q must be the square of a positive rational");
  if (*root == 1) throw InvalidInput("numeric q must differ from 1");
  return NumericQ{*root};
}

inline NumScalar NumericQ::t_pow(int k) const {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= t;
  for (int i = 0; i > k; --i) r /= t;
  return NumScalar(r);
}

}  // namespace tvs
