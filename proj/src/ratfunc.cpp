#include "tvs/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "tvs/errors.hpp"

namespace tvs {

namespace {

int smallest_prime_factor(int n) {
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

Laurent compute_cyclotomic(int m, const std::vector<std::unique_ptr<Laurent>>& table) {
  // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d
  Laurent r = Laurent::monomial(m) - Laurent(1);
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    r = *r.divide_exact(*table[static_cast<std::size_t>(d)]);
  }
  return r;
}

// Factor list of Phi_m(t^k), k >= 1, as cyclotomic indices with multiplicity one each.
void cyclotomic_of_power(int m, int k, std::vector<int>& out) {
  if (k == 1) {
    out.push_back(m);
    return;
  }
  const int p = smallest_prime_factor(k);
  cyclotomic_of_power(m * p, k / p, out);
  if (m % p != 0) cyclotomic_of_power(m, k / p, out);
}

using Slices = std::vector<RatFunc::Slice>;

Slices slices_add(const Slices& a, const Slices& b, bool negate_b) {
  Slices r;
  r.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      r.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      r.emplace_back(j->first, negate_b ? -j->second : j->second);
      ++j;
    } else {
      Laurent s = negate_b ? i->second - j->second : i->second + j->second;
      if (!s.is_zero()) r.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

Slices slices_mul(const Slices& a, const Slices& b) {
  if (a.size() == 1 && b.size() == 1)
    return {{a[0].first + b[0].first, a[0].second * b[0].second}};
  std::map<int, Laurent> acc;
  for (const auto& [ea, pa] : a)
    for (const auto& [eb, pb] : b) acc[ea + eb] += pa * pb;
  Slices r;
  for (auto& [e, p] : acc)
    if (!p.is_zero()) r.emplace_back(e, std::move(p));
  return r;
}

Laurent cyclo_product(const std::vector<std::pair<int, int>>& f) {
  Laurent r(1);
  for (const auto& [m, e] : f)
    for (int i = 0; i < e; ++i) r *= cyclotomic(m);
  return r;
}

std::vector<std::pair<int, int>> cyclo_merge(const std::vector<std::pair<int, int>>& a,
                                             const std::vector<std::pair<int, int>>& b) {
  std::vector<std::pair<int, int>> r;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      r.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      r.push_back(*j++);
    } else {
      r.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

int euler_phi(int m) {
  int r = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

const Laurent& cyclotomic(int m) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<Laurent>> table = [] {
    std::vector<std::unique_ptr<Laurent>> t(1);
    for (int k = 1; k <= 256; ++k) t.push_back(std::make_unique<Laurent>(compute_cyclotomic(k, t)));
    return t;
  }();
  if (m < 1) throw InvalidInput("cyclotomic index must be positive");
  if (m <= 256) return *table[static_cast<std::size_t>(m)];
  std::lock_guard lock(mu);
  while (table.size() <= static_cast<std::size_t>(m)) {
    const int k = static_cast<int>(table.size());
    table.push_back(std::make_unique<Laurent>(compute_cyclotomic(k, table)));
  }
  return *table[static_cast<std::size_t>(m)];
}

RatFunc::RatFunc(const Rational& c) {
  if (c != 0) num_.emplace_back(0, Laurent(c));
}

RatFunc RatFunc::t_pow(int k) {
  RatFunc r;
  r.num_.emplace_back(0, Laurent::monomial(k));
  return r;
}

RatFunc RatFunc::a_pow(int k) {
  RatFunc r;
  r.num_.emplace_back(k, Laurent(1));
  return r;
}

RatFunc RatFunc::from_slices(std::vector<Slice> num) {
  std::sort(num.begin(), num.end(), [](const Slice& x, const Slice& y) { return x.first < y.first; });
  RatFunc r;
  for (auto& s : num) {
    if (!r.num_.empty() && r.num_.back().first == s.first)
      r.num_.back().second += s.second;
    else
      r.num_.push_back(std::move(s));
    if (r.num_.back().second.is_zero()) r.num_.pop_back();
  }
  return r;
}

RatFunc RatFunc::from_laurent_t(const Laurent& p) {
  RatFunc r;
  if (!p.is_zero()) r.num_.emplace_back(0, p);
  return r;
}

bool RatFunc::is_one() const {
  return num_.size() == 1 && num_[0].first == 0 && num_[0].second.is_constant() &&
         num_[0].second.coeffs()[0] == 1 && cyclo_.empty() && resid_.is_constant();
}

bool RatFunc::is_rational() const {
  return num_.empty() || (num_.size() == 1 && num_[0].first == 0 && num_[0].second.is_constant() &&
                          cyclo_.empty() && resid_.is_constant());
}

Rational RatFunc::rational_value() const { return num_.empty() ? Rational(0) : num_[0].second.coeffs()[0]; }

Laurent RatFunc::denominator() const { return cyclo_product(cyclo_) * resid_; }

void RatFunc::scale_numerator(const Laurent& f) {
  for (auto& s : num_) s.second *= f;
}

void RatFunc::divide_numerator(const Laurent& f) {
  for (auto& s : num_) s.second = *s.second.divide_exact(f);
}

void RatFunc::cancel() {
  if (num_.empty()) {
    cyclo_.clear();
    resid_ = Laurent(1);
    return;
  }
  for (auto& [m, e] : cyclo_) {
    const Laurent& phi = cyclotomic(m);
    while (e > 0) {
      Slices divided;
      divided.reserve(num_.size());
      bool ok = true;
      for (const auto& [ea, p] : num_) {
        auto q = p.divide_exact(phi);
        if (!q) {
          ok = false;
          break;
        }
        divided.emplace_back(ea, std::move(*q));
      }
      if (!ok) break;
      num_ = std::move(divided);
      --e;
    }
  }
  std::erase_if(cyclo_, [](const auto& f) { return f.second == 0; });
  if (!resid_.is_constant()) {
    Laurent g = resid_;
    for (const auto& s : num_) {
      g = poly_gcd(g, s.second);
      if (g.is_constant()) break;
    }
    if (!g.is_constant()) {
      resid_ = *resid_.divide_exact(g);
      divide_numerator(g);
    }
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (cyclo_ == o.cyclo_ && resid_ == o.resid_) {
    num_ = slices_add(num_, o.num_, false);
    if (!cyclo_.empty() || !resid_.is_constant()) cancel();
    if (num_.empty()) cancel();
    return *this;
  }
  // common denominator: max exponents on cyclotomic factors, lcm on residuals
  std::vector<std::pair<int, int>> lhs_extra, rhs_extra, common;
  auto i = cyclo_.cbegin();
  auto j = o.cyclo_.cbegin();
  while (i != cyclo_.end() || j != o.cyclo_.end()) {
    if (j == o.cyclo_.end() || (i != cyclo_.end() && i->first < j->first)) {
      rhs_extra.push_back(*i);
      common.push_back(*i++);
    } else if (i == cyclo_.end() || j->first < i->first) {
      lhs_extra.push_back(*j);
      common.push_back(*j++);
    } else {
      if (i->second > j->second) rhs_extra.emplace_back(i->first, i->second - j->second);
      if (j->second > i->second) lhs_extra.emplace_back(i->first, j->second - i->second);
      common.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  Laurent lhs_mult = cyclo_product(lhs_extra), rhs_mult = cyclo_product(rhs_extra);
  Laurent resid = resid_;
  if (!(resid_ == o.resid_)) {
    const Laurent g = poly_gcd(resid_, o.resid_);
    const Laurent r1 = *resid_.divide_exact(g), r2 = *o.resid_.divide_exact(g);
    lhs_mult *= r2;
    rhs_mult *= r1;
    resid = resid_ * r2;
  }
  Slices a = num_, b = o.num_;
  for (auto& s : a) s.second *= lhs_mult;
  for (auto& s : b) s.second *= rhs_mult;
  num_ = slices_add(a, b, false);
  cyclo_ = std::move(common);
  resid_ = std::move(resid);
  cancel();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  for (auto& s : r.num_) s.second = -s.second;
  return r;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (o.is_rational()) {
    const Rational c = o.rational_value();
    for (auto& s : num_) s.second *= c;
    return *this;
  }
  if (is_rational()) {
    const Rational c = rational_value();
    *this = o;
    for (auto& s : num_) s.second *= c;
    return *this;
  }
  num_ = slices_mul(num_, o.num_);
  const bool had_den = !cyclo_.empty() || !resid_.is_constant() || !o.cyclo_.empty() ||
                       !o.resid_.is_constant();
  cyclo_ = cyclo_merge(cyclo_, o.cyclo_);
  if (!o.resid_.is_constant()) resid_ *= o.resid_;
  if (had_den) cancel();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_rational()) {
    const Rational c = o.rational_value();
    for (auto& s : num_) s.second *= Rational(1) / c;
    return *this;
  }
  if (o.num_.size() != 1) throw NonInvertibleDenominator(o.to_string());
  const int a_shift = o.num_[0].first;
  const Laurent& p = o.num_[0].second;

  // Factor the divisor's numerator as c * t^s * prod Phi_m^e * R.
  Laurent rest = p.polynomial_part();
  const int t_shift = p.low();
  const Rational lead = rest.leading();
  rest = rest.monic();
  std::vector<std::pair<int, int>> found;
  const int span = rest.span();
  const int bound = 2 * span * span + 2;
  for (int m = 1; m <= bound && rest.span() > 0; ++m) {
    if (euler_phi(m) > rest.span()) continue;
    int e = 0;
    while (rest.span() >= euler_phi(m)) {
      auto q = rest.divide_exact(cyclotomic(m));
      if (!q) break;
      rest = std::move(*q);
      ++e;
    }
    if (e > 0) found.emplace_back(m, e);
  }

  Laurent mult = o.denominator();
  mult *= Rational(1) / lead;
  mult = mult.shifted(-t_shift);
  for (auto& s : num_) {
    s.first -= a_shift;
    s.second *= mult;
  }
  cyclo_ = cyclo_merge(cyclo_, found);
  if (!rest.is_constant()) resid_ *= rest;
  cancel();
  return *this;
}

RatFunc RatFunc::substitute(int tk, int ak) const {
  if (tk == 0) throw InvalidInput("substitution t -> t^0 is not an endomorphism");
  RatFunc r;
  if (is_zero()) return r;
  for (const auto& [e, p] : num_) r.num_.emplace_back(e * ak, p.substitute_power(tk));
  std::sort(r.num_.begin(), r.num_.end(), [](const Slice& x, const Slice& y) { return x.first < y.first; });
  const int k = tk > 0 ? tk : -tk;
  std::map<int, int> factors;
  Laurent unit(1);  // numerator correction from inverting t
  for (const auto& [m, e] : cyclo_) {
    std::vector<int> list;
    cyclotomic_of_power(m, k, list);
    for (int n : list) {
      factors[n] += e;
      if (tk < 0) {
        // Phi_n(1/t) = t^{-phi(n)} Phi_n(t), with an extra sign for n = 1
        Laurent u = Laurent::monomial(euler_phi(n), n == 1 ? -1 : 1);
        for (int i = 0; i < e; ++i) unit *= u;
      }
    }
  }
  for (const auto& f : factors) r.cyclo_.push_back(f);
  if (!resid_.is_constant()) {
    const Laurent sub = resid_.substitute_power(tk);
    const Laurent poly = sub.polynomial_part();
    r.resid_ = poly.monic();
    unit *= Laurent::monomial(-sub.low(), Rational(1) / poly.leading());
  }
  if (!unit.is_constant() || unit.coeffs()[0] != 1) r.scale_numerator(unit);
  return r;
}

namespace {

std::string term_string(const Rational& c, int te, int ae, bool leading) {
  std::ostringstream os;
  Rational mag = c;
  if (!leading) {
    os << (c < 0 ? " - " : " + ");
    mag = abs(c);
  } else if (c < 0 && mag == -1 && (te != 0 || ae != 0)) {
    os << "-";
    mag = 1;
  }
  bool wrote = false;
  if (mag != 1 || (te == 0 && ae == 0)) {
    os << mag.get_str();
    wrote = true;
  }
  auto var = [&](const char* v, int e) {
    if (e == 0) return;
    if (wrote) os << "*";
    os << v;
    if (e != 1) os << "^" << e;
    wrote = true;
  };
  var("t", te);
  var("a", ae);
  return os.str();
}

}  // namespace

std::string RatFunc::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::tuple<int, int, Rational>> terms;
  for (const auto& [ae, p] : num_)
    for (int te = p.low(); te <= p.high(); ++te) {
      Rational c = p.coeff(te);
      if (c != 0) terms.emplace_back(te, ae, std::move(c));
    }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  std::string num;
  for (std::size_t i = 0; i < terms.size(); ++i)
    num += term_string(std::get<2>(terms[i]), std::get<0>(terms[i]), std::get<1>(terms[i]), i == 0);
  if (cyclo_.empty() && resid_.is_constant()) return num;
  return "(" + num + ")/(" + denominator().to_string("t") + ")";
}

RatFunc quantum_integer(int n) { return RatFunc::from_laurent_t(Laurent::monomial(n) - Laurent::monomial(-n)); }

}  // namespace tvs
