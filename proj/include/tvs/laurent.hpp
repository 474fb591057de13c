#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tvs {

using Rational = mpq_class;

/// n/d in canonical form (mpq_class(n, d) does not reduce).
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Univariate Laurent polynomial with rational coefficients, stored densely
/// from the lowest nonzero exponent. The zero polynomial has no coefficients.
class Laurent {
 public:
  Laurent() = default;
  Laurent(const Rational& c);  // NOLINT: constants convert implicitly
  Laurent(long c) : Laurent(Rational(c)) {}

  static Laurent monomial(int exponent, const Rational& c = 1);
  static Laurent from_coeffs(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() == 1 && lo_ == 0; }
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  /// Degree spread high - low; 0 for monomials.
  int span() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int exponent) const;
  const Rational& leading() const { return c_.back(); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const Rational& c);
  Laurent operator-() const;

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(Laurent a, const Rational& c) { return a *= c; }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  Laurent shifted(int k) const;
  /// Substitutes x -> x^k for k != 0.
  Laurent substitute_power(int k) const;
  /// Rescales x -> c*x.
  Laurent rescaled(const Rational& c) const;
  Rational eval(const Rational& x) const;

  /// Quotient by d when d divides *this in the Laurent ring (monomials are units).
  std::optional<Laurent> divide_exact(const Laurent& d) const;
  /// Polynomial part normalized so the lowest exponent is 0.
  Laurent polynomial_part() const { return shifted(-lo_); }
  Laurent monic() const;

  /// Terms ascending by exponent, "c*x^e" joined by " + "; "0" for zero.
  std::string to_string(std::string_view var) const;

 private:
  void trim();

  int lo_ = 0;
  std::vector<Rational> c_;
};

/// Monic gcd of the polynomial parts of a and b (t-powers are units).
Laurent poly_gcd(const Laurent& a, const Laurent& b);

std::string rational_string(const Rational& c);

}  // namespace tvs
