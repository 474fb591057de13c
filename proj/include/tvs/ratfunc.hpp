#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tvs/laurent.hpp"

namespace tvs {

/// Cyclotomic polynomial Phi_m(t), m >= 1 (memoized, thread-safe).
const Laurent& cyclotomic(int m);
int euler_phi(int m);

/// Exact scalar: a rational function of t = q^{1/2} whose numerator is a
/// Laurent polynomial in t and a, and whose denominator is a-free.
///
/// Canonical form: numerator coprime to the denominator, denominator monic
/// with nonzero constant term, stored factored as
///   prod_m Phi_m(t)^{e_m} * R(t)
/// where R carries no cyclotomic factor. Equality is structural.
class RatFunc {
 public:
  using Slice = std::pair<int, Laurent>;  // a-exponent, coefficient in t

  RatFunc() = default;
  RatFunc(const Rational& c);  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}
  static RatFunc t_pow(int k);
  static RatFunc a_pow(int k);
  static RatFunc from_slices(std::vector<Slice> num);
  static RatFunc from_laurent_t(const Laurent& p);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  /// True when the value is a rational constant.
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  bool a_free() const { return num_.empty() || (num_.size() == 1 && num_[0].first == 0); }

  const std::vector<Slice>& numerator() const { return num_; }
  const std::vector<std::pair<int, int>>& cyclotomic_factors() const { return cyclo_; }
  const Laurent& residual_factor() const { return resid_; }
  /// Expanded denominator polynomial.
  Laurent denominator() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.cyclo_ == b.cyclo_ && a.resid_ == b.resid_;
  }

  /// Ring endomorphism t -> t^tk, a -> a^ak (tk != 0). Adams operators use tk = ak = k.
  RatFunc substitute(int tk, int ak) const;

  /// Canonical string "(num)/(den)", or "num" when the denominator is 1.
  /// Numerator terms sorted by t-exponent then a-exponent.
  std::string to_string() const;

 private:
  void cancel();
  void scale_numerator(const Laurent& f);
  void divide_numerator(const Laurent& f);

  std::vector<Slice> num_;                  // sorted by a-exponent, nonzero slices
  std::vector<std::pair<int, int>> cyclo_;  // (m, e), sorted by m, e > 0
  Laurent resid_ = Laurent(1);              // monic, R(0) != 0
};

/// Quantum integer {n} = t^n - t^{-n}.
RatFunc quantum_integer(int n);

}  // namespace tvs
