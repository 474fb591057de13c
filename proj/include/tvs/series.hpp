#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "tvs/errors.hpp"
#include "tvs/laurent.hpp"

namespace tvs {

/// Exponent vector over the formal parameters of a Grading.
using Monomial = std::vector<int>;

/// Named formal parameters (Q_1, xi, ...) with per-parameter degree weights
/// and a weighted total-degree truncation cap.
class Grading {
 public:
  Grading(std::vector<std::string> names, std::vector<int> weights, int cap);

  static std::shared_ptr<const Grading> make(std::vector<std::string> names, int cap) {
    std::vector<int> w(names.size(), 1);
    return std::make_shared<const Grading>(std::move(names), std::move(w), cap);
  }
  static std::shared_ptr<const Grading> make(std::vector<std::string> names, std::vector<int> weights,
                                             int cap) {
    return std::make_shared<const Grading>(std::move(names), std::move(weights), cap);
  }

  int cap() const { return cap_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t index_of(const std::string& name) const;

  int degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += weights_[i] * m[i];
    return d;
  }
  Monomial zero() const { return Monomial(names_.size(), 0); }
  Monomial unit(const std::string& name, int exponent = 1) const {
    Monomial m = zero();
    m[index_of(name)] = exponent;
    return m;
  }
  std::string monomial_string(const Monomial& m) const;

  friend bool operator==(const Grading& a, const Grading& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_ && a.cap_ == b.cap_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  int cap_;
};

using GradingPtr = std::shared_ptr<const Grading>;

inline Grading::Grading(std::vector<std::string> names, std::vector<int> weights, int cap)
    : names_(std::move(names)), weights_(std::move(weights)), cap_(cap) {
  if (names_.size() != weights_.size()) throw InvalidInput("grading: one weight per parameter");
  for (int w : weights_)
    if (w < 0) throw InvalidInput("grading: weights must be non-negative");
  if (cap_ < 0) throw InvalidInput("grading: cap must be non-negative");
}

inline std::size_t Grading::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidInput("unknown formal parameter " + name);
  return static_cast<std::size_t>(it - names_.begin());
}

inline std::string Grading::monomial_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names_[i];
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline Monomial monomial_add(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline void check_compatible(const GradingPtr& a, const GradingPtr& b) {
  if (a != b && !(*a == *b)) throw InvalidInput("operands use different gradings");
}

/// Truncated multivariate polynomial in the formal parameters of a grading,
/// with coefficients in S. Terms of weighted degree above cap() are dropped.
template <class S>
class NovikovSeries {
 public:
  using Terms = std::map<Monomial, S>;

  NovikovSeries() = default;
  explicit NovikovSeries(GradingPtr g) : g_(std::move(g)), cap_(g_->cap()) {}
  NovikovSeries(GradingPtr g, int cap) : g_(std::move(g)), cap_(cap) {}

  static NovikovSeries constant(GradingPtr g, const S& c) {
    NovikovSeries r(g);
    r.add_term(g->zero(), c);
    return r;
  }

  const GradingPtr& grading() const { return g_; }
  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const S& c) {
    if (c.is_zero() || g_->degree(m) > cap_) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S() : it->second;
  }
  S constant_term() const { return coefficient(g_->zero()); }

  NovikovSeries& operator+=(const NovikovSeries& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  NovikovSeries& operator-=(const NovikovSeries& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  NovikovSeries& operator*=(const S& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  NovikovSeries operator-() const {
    NovikovSeries r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
  }
  friend NovikovSeries operator+(NovikovSeries a, const NovikovSeries& b) { return a += b; }
  friend NovikovSeries operator-(NovikovSeries a, const NovikovSeries& b) { return a -= b; }
  friend NovikovSeries operator*(NovikovSeries a, const S& c) { return a *= c; }

  friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
    check_compatible(a.g_, b.g_);
    NovikovSeries r(a.g_, std::min(a.cap_, b.cap_));
    for (const auto& [ma, ca] : a.terms_) {
      const int da = a.g_->degree(ma);
      for (const auto& [mb, cb] : b.terms_) {
        if (da + a.g_->degree(mb) > r.cap_) continue;
        r.add_term(monomial_add(ma, mb), ca * cb);
      }
    }
    return r;
  }
  NovikovSeries& operator*=(const NovikovSeries& o) { return *this = *this * o; }

  friend bool operator==(const NovikovSeries& a, const NovikovSeries& b) { return a.terms_ == b.terms_; }

  /// Drops terms above the given cap.
  NovikovSeries truncated(int cap) const {
    NovikovSeries r(g_, std::min(cap, cap_));
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

  /// Multiplicative inverse under truncation. The constant term must be an
  /// invertible scalar and every other term must have positive degree.
  NovikovSeries inverse() const {
    const S c0 = constant_term();
    if (c0.is_zero()) throw NonUnitClosedSector();
    NovikovSeries u(g_, cap_);  // this/c0 - 1
    for (const auto& [m, c] : terms_) {
      if (g_->degree(m) == 0 && m != g_->zero()) throw NonUnitClosedSector();
      if (m != g_->zero()) u.add_term(m, c / c0);
    }
    NovikovSeries result = constant(g_, S(1));
    result.cap_ = cap_;
    NovikovSeries power = result;
    const NovikovSeries neg = -u;
    while (true) {
      power *= neg;
      if (power.is_zero()) break;
      result += power;
    }
    for (auto& [m, v] : result.terms_) v /= c0;
    return result;
  }

  template <class T, class Fn>
  NovikovSeries<T> map(Fn&& fn) const {
    NovikovSeries<T> r(g_, cap_);
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
  }

  /// "(c1)*m1 + (c2)*m2", monomials in map order; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      const std::string mono = g_->monomial_string(m);
      s += "(" + c.to_string() + ")";
      if (mono != "1") s += "*" + mono;
    }
    return s;
  }

 private:
  GradingPtr g_;
  int cap_ = 0;
  Terms terms_;
};

}  // namespace tvs
