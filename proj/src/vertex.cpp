#include "tvs/vertex.hpp"

namespace tvs {

SymFunc<RatFunc> closed_form_log(const StripGeometry& strip, int cap) {
  using SF = SymFunc<RatFunc>;
  const auto g = strip.grading(cap);
  const int n = strip.size();
  const RatFunc inv1 = RatFunc(1) / quantum_integer(1);
  const Partition p1{1}, e;
  const auto A = VertexType::A;

  SF log(g, {1, 1}, Basis::Power);
  auto add = [&](const Partition& l1, const Partition& l2, const RatFunc& c, const Monomial& m,
                 PlethysticVariant v) { log += plethystic_log(SF::basis_element(g, {1, 1}, Basis::Power, {l1, l2}, c, m), v); };

  // annulus between L1 and L2
  if (strip.type(n) == A)
    add(p1, p1, RatFunc(1), strip.q_path(1, n), PlethysticVariant::Expp);
  else
    add(p1, p1, RatFunc(-1), strip.q_path(1, n), PlethysticVariant::Exp);

  for (int k = 1; k <= n; ++k) {
    const bool ka = strip.type(k) == A, na = strip.type(n) == A;
    // disk from v_k to L1
    add(p1, e, ka ? inv1 : -inv1, strip.q_path(1, k), PlethysticVariant::Exp);
    // disk from v_k to L2
    const RatFunc c = (ka == na) ? inv1 : -inv1;
    add(e, p1, c, strip.q_path(k, n), na ? PlethysticVariant::Expp : PlethysticVariant::Exp);
  }
  return log;
}

}  // namespace tvs
