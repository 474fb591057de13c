#include "tvs/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "tvs/errors.hpp"

namespace tvs {

Laurent::Laurent(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Laurent Laurent::monomial(int exponent, const Rational& c) {
  Laurent r;
  if (c != 0) {
    r.lo_ = exponent;
    r.c_.push_back(c);
  }
  return r;
}

Laurent Laurent::from_coeffs(int low, std::vector<Rational> coeffs) {
  Laurent r;
  r.lo_ = low;
  r.c_ = std::move(coeffs);
  r.trim();
  return r;
}

void Laurent::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<int>(first);
  }
  if (c_.empty()) lo_ = 0;
}

Rational Laurent::coeff(int exponent) const {
  if (c_.empty() || exponent < lo_ || exponent > high()) return 0;
  return c_[static_cast<std::size_t>(exponent - lo_)];
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(lo_, o.lo_);
  const int hi = std::max(high(), o.high());
  if (lo < lo_ || hi > high()) {
    std::vector<Rational> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i)
      grown[static_cast<std::size_t>(lo_ - lo) + i] = std::move(c_[i]);
    c_ = std::move(grown);
    lo_ = lo;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[static_cast<std::size_t>(o.lo_ - lo_) + i] += o.c_[i];
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Laurent r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  Rational tmp;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      r.c_[i + j] += tmp;
    }
  }
  r.trim();
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent& Laurent::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    lo_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

Laurent Laurent::substitute_power(int k) const {
  assert(k != 0);
  if (is_zero()) return {};
  if (k == 1) return *this;
  Laurent r;
  const int a = lo_ * k, b = high() * k;
  r.lo_ = std::min(a, b);
  r.c_.assign(static_cast<std::size_t>(std::abs(b - a) + 1), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const int e = (lo_ + static_cast<int>(i)) * k;
    r.c_[static_cast<std::size_t>(e - r.lo_)] = c_[i];
  }
  r.trim();
  return r;
}

Laurent Laurent::rescaled(const Rational& c) const {
  if (c == 0) throw DivisionByZero();
  Laurent r = *this;
  Rational pw = 1;
  for (int e = 0; e < lo_; ++e) pw *= c;
  for (int e = lo_; e < 0; ++e) pw /= c;
  for (auto& x : r.c_) {
    x *= pw;
    pw *= c;
  }
  return r;
}

Rational Laurent::eval(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (lo_ < 0) throw PoleAtEvaluationPoint("negative power at 0");
    return lo_ == 0 ? c_[0] : Rational(0);
  }
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  Rational pw = 1;
  for (int e = 0; e < lo_; ++e) pw *= x;
  for (int e = lo_; e < 0; ++e) pw /= x;
  return acc * pw;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& d) const {
  if (d.is_zero()) throw DivisionByZero();
  if (is_zero()) return Laurent{};
  if (d.c_.size() > c_.size()) return std::nullopt;
  // Long division from the top on the polynomial parts.
  std::vector<Rational> rem = c_;
  const std::size_t dn = d.c_.size();
  const std::size_t qn = rem.size() - dn + 1;
  std::vector<Rational> q(qn);
  const Rational& lead = d.c_.back();
  const bool monic = lead == 1;
  Rational tmp;
  for (std::size_t k = qn; k-- > 0;) {
    Rational& top = rem[k + dn - 1];
    if (top == 0) continue;
    q[k] = monic ? top : top / lead;
    for (std::size_t j = 0; j < dn; ++j) {
      mpq_mul(tmp.get_mpq_t(), q[k].get_mpq_t(), d.c_[j].get_mpq_t());
      rem[k + j] -= tmp;
    }
  }
  for (std::size_t k = 0; k + 1 < dn; ++k)
    if (rem[k] != 0) return std::nullopt;
  return from_coeffs(lo_ - d.lo_, std::move(q));
}

Laurent Laurent::monic() const {
  if (is_zero()) return {};
  Laurent r = *this;
  const Rational lead = c_.back();
  for (auto& x : r.c_) x /= lead;
  return r;
}

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
  Laurent x = a.polynomial_part(), y = b.polynomial_part();
  if (x.is_zero()) return y.monic();
  if (y.is_zero()) return x.monic();
  while (!y.is_zero()) {
    if (x.span() < y.span()) std::swap(x, y);
    // remainder of x by y
    std::vector<Rational> rem = x.coeffs();
    const auto& dc = y.coeffs();
    const std::size_t dn = dc.size();
    for (std::size_t k = rem.size() - dn + 1; k-- > 0;) {
      const Rational f = rem[k + dn - 1] / dc.back();
      if (f == 0) continue;
      for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= f * dc[j];
    }
    rem.resize(dn - 1);
    Laurent r = Laurent::from_coeffs(0, std::move(rem));
    // keep the remainder as a polynomial with nonzero constant term
    x = std::move(y);
    y = r.is_zero() ? r : r.polynomial_part().monic();
  }
  return x.monic();
}

std::string rational_string(const Rational& c) { return c.get_str(); }

std::string Laurent::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const int e = lo_ + static_cast<int>(i);
    Rational c = c_[i];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0 && e != 0 && c == -1) {
      os << "-";
      c = 1;
    }
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace tvs
