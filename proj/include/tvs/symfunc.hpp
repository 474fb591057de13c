#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tvs/characters.hpp"
#include "tvs/partition.hpp"
#include "tvs/ratfunc.hpp"
#include "tvs/series.hpp"

namespace tvs {

enum class Basis { Schur, Power };

/// One basis tensor s_{l1} (x) ... (x) s_{lr} (or p_...) times a parameter monomial.
struct SymKey {
  std::vector<Partition> slots;
  Monomial mono;
  friend std::strong_ordering operator<=>(const SymKey&, const SymKey&) = default;
  friend bool operator==(const SymKey&, const SymKey&) = default;
};

/// Element of the r-fold tensor power of the ring of symmetric functions, with
/// coefficients in S extended by the formal parameters of a grading.
///
/// The degree of a term is sum_i w_i |lambda_i| + (weighted parameter degree),
/// with per-slot weights w_i; terms of degree above the grading cap are dropped,
/// so every operation is exact modulo the ideal of degree > cap.
template <class S>
class SymFunc {
 public:
  using Terms = std::map<SymKey, S>;

  SymFunc() = default;
  SymFunc(GradingPtr g, int arity, Basis basis)
      : g_(std::move(g)), basis_(basis), slot_weights_(static_cast<std::size_t>(arity), 1) {}
  SymFunc(GradingPtr g, std::vector<int> slot_weights, Basis basis)
      : g_(std::move(g)), basis_(basis), slot_weights_(std::move(slot_weights)) {}

  /// The unit 1 (empty partitions in every slot).
  static SymFunc one(GradingPtr g, std::vector<int> slot_weights, Basis basis = Basis::Power) {
    SymFunc r(g, std::move(slot_weights), basis);
    r.add_term(r.empty_key(), S(1));
    return r;
  }
  /// A single basis element b_{parts} times scalar c times monomial m.
  static SymFunc basis_element(GradingPtr g, std::vector<int> slot_weights, Basis basis,
                               std::vector<Partition> parts, const S& c = S(1), Monomial m = {}) {
    SymFunc r(g, std::move(slot_weights), basis);
    if (m.empty()) m = r.g_->zero();
    r.add_term(SymKey{std::move(parts), std::move(m)}, c);
    return r;
  }

  const GradingPtr& grading() const { return g_; }
  int cap() const { return g_->cap(); }
  int arity() const { return static_cast<int>(slot_weights_.size()); }
  Basis basis() const { return basis_; }
  const std::vector<int>& slot_weights() const { return slot_weights_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  SymKey empty_key() const { return SymKey{std::vector<Partition>(slot_weights_.size()), g_->zero()}; }

  int degree(const SymKey& k) const {
    int d = g_->degree(k.mono);
    for (std::size_t i = 0; i < k.slots.size(); ++i) d += slot_weights_[i] * k.slots[i].size();
    return d;
  }

  void add_term(const SymKey& k, const S& c) {
    if (c.is_zero() || degree(k) > cap()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_term(SymKey&& k, const S& c) {
    if (c.is_zero() || degree(k) > cap()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  S coefficient(const SymKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? S() : it->second;
  }
  /// Coefficient of a basis tensor, as a series in the formal parameters.
  NovikovSeries<S> coefficient(const std::vector<Partition>& parts) const {
    int slot_deg = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) slot_deg += slot_weights_[i] * parts[i].size();
    NovikovSeries<S> r(g_, cap() - slot_deg);
    for (auto it = terms_.lower_bound(SymKey{parts, Monomial{}}); it != terms_.end() && it->first.slots == parts;
         ++it)
      r.add_term(it->first.mono, it->second);
    return r;
  }

  SymFunc& operator+=(const SymFunc& o) {
    require_same_shape(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    require_same_shape(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SymFunc& operator*=(const S& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  SymFunc operator-() const {
    SymFunc r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const S& c) { return a *= c; }

  /// Multiplies every coefficient by a parameter series (degrees add, truncated).
  SymFunc times_series(const NovikovSeries<S>& s) const {
    SymFunc r(g_, slot_weights_, basis_);
    for (const auto& [k, c] : terms_) {
      const int dk = degree(k);
      for (const auto& [m, v] : s.terms()) {
        if (dk + g_->degree(m) > cap()) continue;
        r.add_term(SymKey{k.slots, monomial_add(k.mono, m)}, c * v);
      }
    }
    return r;
  }

  /// Structural equality; both operands must use the same basis.
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  template <class T, class Fn>
  SymFunc<T> map_coefficients(Fn&& fn) const {
    SymFunc<T> r(g_, slot_weights_, basis_);
    for (const auto& [k, c] : terms_) r.add_term(k, fn(c));
    return r;
  }

  /// Same element re-read under a different grading (cap may drop terms).
  SymFunc regraded(GradingPtr g) const {
    SymFunc r(std::move(g), slot_weights_, basis_);
    for (const auto& [k, c] : terms_) r.add_term(k, c);
    return r;
  }

  void require_same_shape(const SymFunc& o) const {
    check_compatible(g_, o.g_);
    if (slot_weights_ != o.slot_weights_) throw InvalidInput("symmetric functions differ in slot layout");
    if (basis_ != o.basis_) throw InvalidInput("symmetric functions are in different bases");
  }

  /// Internal: raw access for basis-changing algorithms.
  Terms& mutable_terms() { return terms_; }

 private:
  GradingPtr g_;
  Basis basis_ = Basis::Power;
  std::vector<int> slot_weights_;
  Terms terms_;
};

namespace detail {

/// Applies a per-partition linear map (partition -> combination) on one slot.
template <class S, class Expand>
SymFunc<S> transform_slot(const SymFunc<S>& f, std::size_t slot, Basis target, Expand&& expand) {
  SymFunc<S> r(f.grading(), f.slot_weights(), target);
  for (const auto& [k, c] : f.terms()) {
    for (const auto& [lam, w] : expand(k.slots[slot])) {
      SymKey nk = k;
      nk.slots[slot] = lam;
      S v = c;
      v *= S(w);
      r.add_term(std::move(nk), v);
    }
  }
  return r;
}

inline std::vector<std::pair<Partition, Rational>> schur_to_power(const Partition& lambda) {
  std::vector<std::pair<Partition, Rational>> out;
  const auto& ps = partitions_of(lambda.size());
  const auto& row = character_row(lambda);
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (row[i] != 0) out.emplace_back(ps[i], frac(static_cast<long>(row[i]), static_cast<long>(z_lambda(ps[i]))));
  return out;
}

inline std::vector<std::pair<Partition, Rational>> power_to_schur(const Partition& mu) {
  std::vector<std::pair<Partition, Rational>> out;
  const auto& ps = partitions_of(mu.size());
  const auto& col = character_column(mu);
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (col[i] != 0) out.emplace_back(ps[i], Rational(static_cast<long>(col[i])));
  return out;
}

}  // namespace detail

/// Change of basis by Murnaghan-Nakayama characters:
/// s_l = sum_m chi^l(m)/z_m p_m and p_m = sum_l chi^l(m) s_l.
template <class S>
SymFunc<S> convert(const SymFunc<S>& f, Basis target) {
  if (f.basis() == target) return f;
  SymFunc<S> cur = f;
  for (std::size_t slot = 0; slot < static_cast<std::size_t>(f.arity()); ++slot) {
    if (target == Basis::Power)
      cur = detail::transform_slot(cur, slot, Basis::Schur, detail::schur_to_power);
    else
      cur = detail::transform_slot(cur, slot, Basis::Power, detail::power_to_schur);
  }
  SymFunc<S> out(f.grading(), f.slot_weights(), target);
  out.mutable_terms() = std::move(cur.mutable_terms());
  return out;
}

/// Truncated product; computed in the power-sum basis (p_l p_m = p_{l u m}) and
/// returned in the basis of the left operand.
template <class S>
SymFunc<S> mul(const SymFunc<S>& a, const SymFunc<S>& b) {
  check_compatible(a.grading(), b.grading());
  if (a.slot_weights() != b.slot_weights()) throw InvalidInput("mul: slot layouts differ");
  const SymFunc<S> pa = convert(a, Basis::Power), pb = convert(b, Basis::Power);
  SymFunc<S> r(a.grading(), a.slot_weights(), Basis::Power);
  std::vector<int> db;
  db.reserve(pb.size());
  for (const auto& [k, c] : pb.terms()) db.push_back(pb.degree(k));
  for (const auto& [ka, ca] : pa.terms()) {
    const int da = pa.degree(ka);
    std::size_t j = 0;
    for (const auto& [kb, cb] : pb.terms()) {
      if (da + db[j++] > r.cap()) continue;
      SymKey k;
      k.slots.reserve(ka.slots.size());
      for (std::size_t i = 0; i < ka.slots.size(); ++i) k.slots.push_back(ka.slots[i].merged(kb.slots[i]));
      k.mono = monomial_add(ka.mono, kb.mono);
      r.add_term(std::move(k), ca * cb);
    }
  }
  return convert(r, a.basis());
}

/// Outer tensor product f (x) g; the slots of g follow those of f.
template <class S>
SymFunc<S> tensor(const SymFunc<S>& f, const SymFunc<S>& g) {
  check_compatible(f.grading(), g.grading());
  const SymFunc<S> gg = convert(g, f.basis());
  std::vector<int> w = f.slot_weights();
  w.insert(w.end(), g.slot_weights().begin(), g.slot_weights().end());
  SymFunc<S> r(f.grading(), w, f.basis());
  for (const auto& [ka, ca] : f.terms())
    for (const auto& [kb, cb] : gg.terms()) {
      SymKey k;
      k.slots = ka.slots;
      k.slots.insert(k.slots.end(), kb.slots.begin(), kb.slots.end());
      k.mono = monomial_add(ka.mono, kb.mono);
      r.add_term(std::move(k), ca * cb);
    }
  return r;
}

/// Hall inner product <f, g> (slot-wise on tensor powers); <s_l, s_m> = delta.
template <class S>
NovikovSeries<S> hall_pairing(const SymFunc<S>& f, const SymFunc<S>& g) {
  check_compatible(f.grading(), g.grading());
  const SymFunc<S> sf = convert(f, Basis::Schur), sg = convert(g, Basis::Schur);
  NovikovSeries<S> r(f.grading());
  for (const auto& [ka, ca] : sf.terms())
    for (const auto& [kb, cb] : sg.terms())
      if (ka.slots == kb.slots) r.add_term(monomial_add(ka.mono, kb.mono), ca * cb);
  return r;
}

/// Skewing s_mu^perp on one slot: the adjoint of multiplication by s_mu.
template <class S>
SymFunc<S> skew(const SymFunc<S>& f, std::size_t slot, const Partition& mu) {
  const SymFunc<S> pf = convert(f, Basis::Power);
  // s_mu^perp = sum_sigma chi^mu(sigma)/z_sigma p_sigma^perp, p_k^perp = k d/dp_k
  const auto sigma_terms = detail::schur_to_power(mu);
  auto expand = [&](const Partition& rho) {
    std::vector<std::pair<Partition, Rational>> out;
    for (const auto& [sigma, w] : sigma_terms) {
      // multiplicities
      std::map<int, int> mr, ms;
      for (int p : rho.parts()) ++mr[p];
      for (int p : sigma.parts()) ++ms[p];
      Rational factor = w;
      bool ok = true;
      for (const auto& [part, m] : ms) {
        const int have = mr[part];
        if (have < m) {
          ok = false;
          break;
        }
        for (int i = 0; i < m; ++i) factor *= Rational(part * (have - i));
        mr[part] = have - m;
      }
      if (!ok) continue;
      std::vector<int> rest;
      for (auto it = mr.rbegin(); it != mr.rend(); ++it)
        for (int i = 0; i < it->second; ++i) rest.push_back(it->first);
      out.emplace_back(Partition(std::move(rest)), factor);
    }
    return out;
  };
  SymFunc<S> r = detail::transform_slot(pf, slot, Basis::Power, expand);
  return convert(r, f.basis());
}

/// Contracts slot i against slot j with sum_l s_l^* (x) s_l^* (or s_{l^t}^* when
/// `transpose_second`), removing both slots.
template <class S>
SymFunc<S> contract(const SymFunc<S>& f, std::size_t i, std::size_t j, bool transpose_second) {
  const SymFunc<S> sf = convert(f, Basis::Schur);
  std::vector<int> w;
  for (std::size_t s = 0; s < f.slot_weights().size(); ++s)
    if (s != i && s != j) w.push_back(f.slot_weights()[s]);
  SymFunc<S> r(f.grading(), w, Basis::Schur);
  for (const auto& [k, c] : sf.terms()) {
    const Partition& target = transpose_second ? k.slots[i].transpose() : k.slots[i];
    if (!(k.slots[j] == target)) continue;
    SymKey nk;
    for (std::size_t s = 0; s < k.slots.size(); ++s)
      if (s != i && s != j) nk.slots.push_back(k.slots[s]);
    nk.mono = k.mono;
    r.add_term(std::move(nk), c);
  }
  return r;
}

/// Adams operator psi_k: p_n -> p_{kn}; line elements t -> t^k, a -> a^k, X -> X^k.
inline SymFunc<RatFunc> adams(int k, const SymFunc<RatFunc>& f) {
  if (k < 1) throw InvalidInput("Adams operator index must be >= 1");
  const SymFunc<RatFunc> pf = convert(f, Basis::Power);
  SymFunc<RatFunc> r(f.grading(), f.slot_weights(), Basis::Power);
  for (const auto& [key, c] : pf.terms()) {
    SymKey nk;
    for (const auto& p : key.slots) nk.slots.push_back(p.scaled(k));
    nk.mono = key.mono;
    for (auto& e : nk.mono) e *= k;
    if (r.degree(nk) > r.cap()) continue;
    r.add_term(std::move(nk), k == 1 ? c : c.substitute(k, k));
  }
  return convert(r, f.basis());
}

enum class PlethysticVariant { Exp, Expp };

/// sum_k sgn_k psi_k(f)/k, with sgn_k = 1 (Exp) or (-1)^{k+1} (Expp).
inline SymFunc<RatFunc> plethystic_log(const SymFunc<RatFunc>& f, PlethysticVariant variant) {
  const SymFunc<RatFunc> pf = convert(f, Basis::Power);
  for (const auto& [k, c] : pf.terms())
    if (pf.degree(k) == 0) throw NonNilpotentArgument();
  SymFunc<RatFunc> log(f.grading(), f.slot_weights(), Basis::Power);
  for (int k = 1;; ++k) {
    SymFunc<RatFunc> term = adams(k, pf);
    if (term.is_zero()) break;
    const bool negative = variant == PlethysticVariant::Expp && k % 2 == 0;
    term *= RatFunc(frac(negative ? -1 : 1, k));
    log += term;
  }
  return log;
}

/// exp of an element without degree-0 part, by the graded recurrence
/// n E_n = sum_k k L_k E_{n-k}. Result in the power-sum basis.
template <class S>
SymFunc<S> exp_series(const SymFunc<S>& l) {
  const SymFunc<S> pl = convert(l, Basis::Power);
  const int cap = pl.cap();
  std::vector<SymFunc<S>> parts(static_cast<std::size_t>(cap) + 1,
                                SymFunc<S>(pl.grading(), pl.slot_weights(), Basis::Power));
  for (const auto& [k, c] : pl.terms()) {
    const int d = pl.degree(k);
    if (d == 0) throw NonNilpotentArgument();
    parts[static_cast<std::size_t>(d)].add_term(k, c);
  }
  std::vector<SymFunc<S>> e;
  e.push_back(SymFunc<S>::one(pl.grading(), pl.slot_weights()));
  SymFunc<S> total = e[0];
  for (int n = 1; n <= cap; ++n) {
    SymFunc<S> acc(pl.grading(), pl.slot_weights(), Basis::Power);
    for (int k = 1; k <= n; ++k) {
      const auto& lk = parts[static_cast<std::size_t>(k)];
      if (lk.is_zero() || e[static_cast<std::size_t>(n - k)].is_zero()) continue;
      SymFunc<S> prod = mul(lk, e[static_cast<std::size_t>(n - k)]);
      prod *= S(frac(k, n));
      acc += prod;
    }
    total += acc;
    e.push_back(std::move(acc));
  }
  return total;
}

/// Plethystic exponential Exp/Expp computed in the coefficient context of the
/// field: the Adams operators act symbolically, then the logarithm is lifted.
template <class Field>
SymFunc<typename Field::scalar> plethystic_exp(const Field& field, const SymFunc<RatFunc>& f,
                                               PlethysticVariant variant) {
  using S = typename Field::scalar;
  const SymFunc<RatFunc> log = plethystic_log(f, variant);
  return exp_series(log.template map_coefficients<S>([&](const RatFunc& c) { return field.lift(c); }));
}

/// s_{lambda/mu} in the Schur basis (zero unless mu is contained in lambda).
inline SymFunc<RatFunc> skew_schur(const Partition& lambda, const Partition& mu) {
  auto g = Grading::make({}, lambda.size());
  if (!lambda.contains(mu)) return SymFunc<RatFunc>(g, 1, Basis::Schur);
  const auto s = SymFunc<RatFunc>::basis_element(g, {1}, Basis::Schur, {lambda});
  return convert(skew(s, 0, mu), Basis::Schur);
}

}  // namespace tvs
