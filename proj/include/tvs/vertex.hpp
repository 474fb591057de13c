#pragma once

#include <array>
#include <functional>
#include <string>
#include <tuple>
#include <map>
#include <vector>

#include "tvs/specialization.hpp"
#include "tvs/strip.hpp"
#include "tvs/symfunc.hpp"

namespace tvs {

/// C_{m1 m2 m3} = t^{kappa(m3)} s_{m2}(q^rho) sum_eta s_{m1/eta}(q^{m2^t+rho}) s_{m3^t/eta}(q^{m2+rho}).
template <class Field>
typename Field::scalar topological_vertex(Specializer<Field>& spec, const Partition& m1, const Partition& m2,
                                          const Partition& m3) {
  using S = typename Field::scalar;
  const Partition m2t = m2.transpose(), m3t = m3.transpose();
  S sum;
  for (int n = 0; n <= std::min(m1.size(), m3t.size()); ++n)
    for (const auto& eta : partitions_of(n)) {
      if (!m1.contains(eta) || !m3t.contains(eta)) continue;
      S a = spec.skew(m1, eta, m2t);
      if (a.is_zero()) continue;
      sum += a * spec.skew(m3t, eta, m2);
    }
  if (sum.is_zero()) return sum;
  return spec.field().t_pow(m3.kappa()) * spec.schur(m2) * sum;
}

/// t^{f1 kappa(m1) + f2 kappa(m2) + f3 kappa(m3)} C_{m1 m2 m3}.
template <class Field>
typename Field::scalar framed_vertex(Specializer<Field>& spec, const Partition& m1, const Partition& m2,
                                     const Partition& m3, int f1, int f2, int f3) {
  auto c = topological_vertex(spec, m1, m2, m3);
  if (c.is_zero()) return c;
  return spec.field().t_pow(f1 * m1.kappa() + f2 * m2.kappa() + f3 * m3.kappa()) * c;
}

/// Where the left and right horizontal legs of a strip vertex enter C_{m1 m2 m3}
/// (slot 0, 1, 2 = m1, m2, m3) and with which framing. The vertical leg takes
/// the remaining slot and stays empty.
struct VertexConvention {
  int left_slot;
  int left_framing;
  int right_slot;
  int right_framing;
  friend bool operator==(const VertexConvention&, const VertexConvention&) = default;
};

struct GluingConvention {
  VertexConvention a;
  VertexConvention b;
  /// sign exponent of (-1)^{|lambda|} on an internal edge, indexed [left type][right type]
  std::array<std::array<int, 2>, 2> edge_sign;
  friend bool operator==(const GluingConvention&, const GluingConvention&) = default;

  const VertexConvention& of(VertexType t) const { return t == VertexType::A ? a : b; }
  int sign(VertexType l, VertexType r) const {
    return edge_sign[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
  }
};

/// The convention under which one vertex reproduces the two-leg product formula
/// and gluing reproduces the strip closed form (see the calibration test).
inline GluingConvention calibrated_convention() {
  return GluingConvention{{1, 0, 0, -1}, {0, -1, 1, 0}, {{{0, 1}, {1, 0}}}};
}

template <class Field>
typename Field::scalar strip_vertex_value(Specializer<Field>& spec, const VertexConvention& vc, const Partition& left,
                                          const Partition& right) {
  std::array<Partition, 3> mus;
  std::array<int, 3> fs{0, 0, 0};
  mus[static_cast<std::size_t>(vc.left_slot)] = left;
  fs[static_cast<std::size_t>(vc.left_slot)] = vc.left_framing;
  mus[static_cast<std::size_t>(vc.right_slot)] = right;
  fs[static_cast<std::size_t>(vc.right_slot)] = vc.right_framing;
  return framed_vertex(spec, mus[0], mus[1], mus[2], fs[0], fs[1], fs[2]);
}

enum class Branes { One, Two };
enum class Direction { LeftToRight, RightToLeft };

/// Framed vertex values of both vertex types on all (left, right) leg pairs with
/// |left| + |right| <= cap, computed in parallel with per-thread caches.
template <class Field>
class VertexTable {
 public:
  using S = typename Field::scalar;

  VertexTable(const Field& field, const GluingConvention& conv, int cap)
      : parts_(enumerate_partitions(cap)), cap_(cap) {
    const std::size_t n = parts_.size();
    for (auto& t : values_) t.assign(n * n, S());
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (parts_[i].size() + parts_[j].size() <= cap) jobs.emplace_back(i, j);
#pragma omp parallel
    {
      Specializer<Field> spec(field);
#pragma omp for schedule(dynamic)
      for (std::size_t k = 0; k < jobs.size(); ++k) {
        const auto [i, j] = jobs[k];
        values_[0][i * n + j] = strip_vertex_value(spec, conv.a, parts_[i], parts_[j]);
        values_[1][i * n + j] = strip_vertex_value(spec, conv.b, parts_[i], parts_[j]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) transpose_index_.push_back(partition_position(parts_[i].transpose()));
  }

  const std::vector<Partition>& partitions() const { return parts_; }
  int cap() const { return cap_; }
  const S& value(VertexType t, std::size_t left, std::size_t right) const {
    return values_[t == VertexType::A ? 0 : 1][left * parts_.size() + right];
  }
  std::size_t transpose_index(std::size_t i) const { return transpose_index_[i]; }

 private:
  std::size_t partition_position(const Partition& p) const {
    std::size_t offset = 0;
    for (int s = 0; s < p.size(); ++s) offset += partitions_of(s).size();
    return offset + partition_index(p);
  }

  std::vector<Partition> parts_;
  int cap_;
  std::array<std::vector<S>, 2> values_;
  std::vector<std::size_t> transpose_index_;
};

namespace detail {

/// Adds c * Q_edge^{steps} * s to acc (edge < 0: no Q factor).
template <class S>
void accumulate_shifted(NovikovSeries<S>& acc, const NovikovSeries<S>& s, const S& c, int edge, int steps) {
  for (const auto& [m, v] : s.terms()) {
    Monomial nm = m;
    if (edge >= 0) nm[static_cast<std::size_t>(edge)] += steps;
    acc.add_term(nm, v * c);
  }
}

}  // namespace detail

template <class Field>
SymFunc<typename Field::scalar> glue_strip_with_table(const VertexTable<Field>& table, const StripGeometry& strip,
                                                      int cap, Branes branes, const GluingConvention& conv,
                                                      Direction dir) {
  using S = typename Field::scalar;
  using Series = NovikovSeries<S>;
  const GradingPtr g = strip.grading(cap);
  const auto& P = table.partitions();
  const std::size_t np = P.size();
  const int n = strip.size();
  const bool two = branes == Branes::Two;

  // state[i * np + j]: outer brane partition P[i], open edge partition P[j]
  std::vector<Series> state(np * np);
  auto fresh = [&](std::size_t i, std::size_t j) { return Series(g, cap - P[i].size() - P[j].size()); };
  auto live = [&](std::size_t i, std::size_t j) { return P[i].size() + P[j].size() <= cap; };

  const bool ltr = dir == Direction::LeftToRight;
  const int first = ltr ? 1 : n;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      if (!live(i, j)) continue;
      // ltr: (L1, right leg of v_1); rtl: (L2, left leg of v_n)
      if (!ltr && !two && !P[i].empty()) continue;
      Series s = fresh(i, j);
      const S v = ltr ? table.value(strip.type(first), i, j) : table.value(strip.type(first), j, i);
      if (!v.is_zero()) s.add_term(g->zero(), v);
      state[i * np + j] = std::move(s);
    }

  for (int step = 1; step < n; ++step) {
    // ltr: glue v_{step} (right leg alpha) to v_{step+1} (left leg alpha^t)
    // rtl: glue v_{n-step} (right leg gamma^t) to v_{n-step+1} (left leg gamma)
    const int k = ltr ? step + 1 : n - step;
    const int edge = ltr ? step - 1 : n - step - 1;  // 0-based Q index
    const VertexType lt = strip.type(edge + 1), rt = strip.type(edge + 2);
    const int sign = conv.sign(lt, rt);
    std::vector<Series> next(np * np);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t idx = 0; idx < np * np; ++idx) {
      const std::size_t i = idx / np, j = idx % np;
      if (!live(i, j)) continue;
      Series acc = fresh(i, j);
      for (std::size_t a = 0; a < np; ++a) {
        const Series& cur = state[i * np + a];
        if (cur.is_zero() || P[a].size() + P[i].size() + P[j].size() > cap) continue;
        const std::size_t at = table.transpose_index(a);
        const S& v = ltr ? table.value(strip.type(k), at, j) : table.value(strip.type(k), j, at);
        if (v.is_zero()) continue;
        const S w = (sign && P[a].size() % 2) ? -v : v;
        detail::accumulate_shifted(acc, cur, w, edge, P[a].size());
      }
      next[idx] = std::move(acc);
    }
    state = std::move(next);
  }

  SymFunc<S> z(g, {1, 1}, Basis::Schur);
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      const Series& s = state[i * np + j];
      if (s.is_zero()) continue;
      const Partition& l1 = ltr ? P[i] : P[j];
      const Partition& l2 = ltr ? P[j] : P[i];
      if (!two && !l2.empty()) continue;
      for (const auto& [m, c] : s.terms()) z.add_term(SymKey{{l1, l2}, m}, c);
    }
  return z;
}

/// Sum over partitions on all internal edges and brane legs of the product of
/// framed vertices and propagators (-1)^{s|alpha|} Q_k^{|alpha|}, truncated at
/// |L1| + |L2| + Q-degree <= cap. Transfer-matrix contraction along the chain;
/// each step is parallel over its output entries.
template <class Field>
SymFunc<typename Field::scalar> glue_strip(const Field& field, const StripGeometry& strip, int cap,
                                           Branes branes = Branes::Two,
                                           const GluingConvention& conv = calibrated_convention(),
                                           Direction dir = Direction::LeftToRight) {
  if (cap < 0) throw InvalidInput("truncation must be non-negative");
  const VertexTable<Field> table(field, conv, cap);
  return glue_strip_with_table(table, strip, cap, branes, conv, dir);
}

/// Serial reference: enumerates every assignment of partitions to L1, the
/// internal edges and L2 and multiplies freshly evaluated vertices.
template <class Field>
SymFunc<typename Field::scalar> glue_strip_reference(const Field& field, const StripGeometry& strip, int cap,
                                                     Branes branes = Branes::Two,
                                                     const GluingConvention& conv = calibrated_convention()) {
  using S = typename Field::scalar;
  const GradingPtr g = strip.grading(cap);
  const int n = strip.size();
  Specializer<Field> spec(field);
  std::map<std::tuple<int, Partition, Partition>, S> memo;
  auto vertex = [&](int k, const Partition& l, const Partition& r) {
    const auto t = strip.type(k);
    auto key = std::make_tuple(static_cast<int>(t), l, r);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, strip_vertex_value(spec, conv.of(t), l, r)).first;
    return it->second;
  };
  SymFunc<S> z(g, {1, 1}, Basis::Schur);
  std::vector<Partition> edges;
  std::function<void(const Partition&, const Partition&, int)> rec = [&](const Partition& l1, const Partition& l2,
                                                                          int used) {
    if (static_cast<int>(edges.size()) == n - 1) {
      S val(1);
      Monomial m = g->zero();
      for (int k = 1; k <= n && !val.is_zero(); ++k) {
        const Partition left = k == 1 ? l1 : edges[static_cast<std::size_t>(k - 2)].transpose();
        const Partition& right = k == n ? l2 : edges[static_cast<std::size_t>(k - 1)];
        val *= vertex(k, left, right);
      }
      if (val.is_zero()) return;
      for (int e = 0; e < n - 1; ++e) {
        const int sz = edges[static_cast<std::size_t>(e)].size();
        m[static_cast<std::size_t>(e)] = sz;
        if (conv.sign(strip.type(e + 1), strip.type(e + 2)) && sz % 2) val = -val;
      }
      z.add_term(SymKey{{l1, l2}, m}, val);
      return;
    }
    for (const auto& a : enumerate_partitions(cap - used)) {
      edges.push_back(a);
      rec(l1, l2, used + a.size());
      edges.pop_back();
    }
  };
  for (const auto& l1 : enumerate_partitions(cap))
    for (const auto& l2 : enumerate_partitions(branes == Branes::Two ? cap - l1.size() : 0))
      rec(l1, l2, l1.size() + l2.size());
  return z;
}

/// Z / Z_empty, where Z_empty is the coefficient of s_empty (x) s_empty.
template <class S>
SymFunc<S> z_open(const SymFunc<S>& z) {
  const auto zs = convert(z, Basis::Schur);
  const auto closed = zs.coefficient(std::vector<Partition>(static_cast<std::size_t>(zs.arity())));
  return zs.times_series(closed.inverse());
}

/// Logarithm (before lifting) of the multiple-cover formula for a strip with
/// branes on both legs; slot 0 is L1 and slot 1 is L2.
SymFunc<RatFunc> closed_form_log(const StripGeometry& strip, int cap);

template <class Field>
SymFunc<typename Field::scalar> closed_form(const Field& field, const StripGeometry& strip, int cap) {
  using S = typename Field::scalar;
  const auto log = closed_form_log(strip, cap);
  auto e = exp_series(log.template map_coefficients<S>([&](const RatFunc& c) { return field.lift(c); }));
  return convert(e, Basis::Schur);
}

/// sum_{|m1|+|m2|<=cap} C^{(-1,0,0)}_{m1 m2 empty} s_{m1} (x) s_{m2}.
template <class Field>
SymFunc<typename Field::scalar> two_leg_vertex_series(const Field& field, int cap) {
  using S = typename Field::scalar;
  Specializer<Field> spec(field);
  const auto g = Grading::make({}, cap);
  SymFunc<S> z(g, {1, 1}, Basis::Schur);
  for (const auto& m1 : enumerate_partitions(cap))
    for (const auto& m2 : enumerate_partitions(cap - m1.size()))
      z.add_term(SymKey{{m1, m2}, {}}, framed_vertex(spec, m1, m2, Partition(), -1, 0, 0));
  return z;
}

/// Expp(p_1(x)/{1}) Exp(p_1(y)/{1}) Expp(p_1(x) p_1(y)).
template <class Field>
SymFunc<typename Field::scalar> two_leg_product_formula(const Field& field, int cap) {
  const auto g = Grading::make({}, cap);
  const RatFunc inv1 = RatFunc(1) / quantum_integer(1);
  const Partition p1{1};
  using SF = SymFunc<RatFunc>;
  SF log = plethystic_log(SF::basis_element(g, {1, 1}, Basis::Power, {p1, Partition()}, inv1),
                          PlethysticVariant::Expp);
  log += plethystic_log(SF::basis_element(g, {1, 1}, Basis::Power, {Partition(), p1}, inv1),
                        PlethysticVariant::Exp);
  log += plethystic_log(SF::basis_element(g, {1, 1}, Basis::Power, {p1, p1}), PlethysticVariant::Expp);
  using S = typename Field::scalar;
  auto e = exp_series(log.template map_coefficients<S>([&](const RatFunc& c) { return field.lift(c); }));
  return convert(e, Basis::Schur);
}

/// Searches slot placements and framings in {-1,0,1} for both vertex types and
/// the four edge sign bits, keeping every convention under which z_open(glue)
/// equals the closed form on all given words at the given cap. Words are
/// checked in order and the search is pruned stage by stage, so list them by
/// increasing length ("A", "AA", "AB", ...).
template <class Field>
std::vector<GluingConvention> calibrate_gluing(const Field& field, const std::vector<std::string>& words, int cap) {
  using S = typename Field::scalar;
  std::vector<VertexConvention> placements;
  for (int l = 0; l < 3; ++l)
    for (int r = 0; r < 3; ++r) {
      if (l == r) continue;
      for (int fl = -1; fl <= 1; ++fl)
        for (int fr = -1; fr <= 1; ++fr) placements.push_back({l, fl, r, fr});
    }
  std::vector<StripGeometry> strips;
  std::vector<SymFunc<S>> targets;
  for (const auto& w : words) {
    strips.emplace_back(w);
    targets.push_back(closed_form(field, strips.back(), cap));
  }
  auto uses = [](const StripGeometry& s, VertexType l, VertexType r) {
    for (int k = 1; k < s.size(); ++k)
      if (s.type(k) == l && s.type(k + 1) == r) return true;
    return false;
  };
  auto has_b = [](const StripGeometry& s) {
    for (auto t : s.types())
      if (t == VertexType::B) return true;
    return false;
  };
  // Each stage fixes more of the convention; a word is checked at the first
  // stage where everything it depends on is fixed.
  std::vector<GluingConvention> current;
  const VertexConvention unset{0, 0, 1, 0};
  for (const auto& pa : placements) current.push_back({pa, unset, {{{0, 0}, {0, 0}}}});
  auto filter = [&](std::vector<GluingConvention> cands, auto ready) {
    std::vector<GluingConvention> keep;
    for (const auto& c : cands) {
      bool ok = true;
      for (std::size_t w = 0; w < strips.size() && ok; ++w) {
        if (!ready(strips[w])) continue;
        ok = z_open(glue_strip(field, strips[w], cap, Branes::Two, c)) == targets[w];
      }
      if (ok) keep.push_back(c);
    }
    return keep;
  };
  auto expand = [](const std::vector<GluingConvention>& cands, auto fn) {
    std::vector<GluingConvention> out;
    for (const auto& c : cands) fn(c, out);
    return out;
  };
  const auto A = VertexType::A, B = VertexType::B;
  // stage 1: A vertex alone
  current = filter(current, [&](const StripGeometry& s) { return s.size() == 1; });
  // stage 2: AA sign
  current = expand(current, [](GluingConvention c, auto& out) {
    for (int b = 0; b < 2; ++b) { c.edge_sign[0][0] = b; out.push_back(c); }
  });
  current = filter(current, [&](const StripGeometry& s) { return s.size() > 1 && !has_b(s); });
  // stage 3: B vertex and all remaining signs
  current = expand(current, [&](GluingConvention c, auto& out) {
    for (const auto& pb : placements)
      for (int bits = 0; bits < 8; ++bits) {
        c.b = pb;
        c.edge_sign[0][1] = bits & 1;
        c.edge_sign[1][0] = (bits >> 1) & 1;
        c.edge_sign[1][1] = (bits >> 2) & 1;
        out.push_back(c);
      }
  });
  // cheap words first: those with only an AB edge
  current = filter(current, [&](const StripGeometry& s) {
    return has_b(s) && !uses(s, B, A) && !uses(s, B, B);
  });
  current = filter(current, [&](const StripGeometry& s) { return has_b(s) && (uses(s, B, A) || uses(s, B, B)); });
  return current;
}

}  // namespace tvs
