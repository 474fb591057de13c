#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "tvs/vertex.hpp"

using namespace tvs;

namespace {

const RatFunc z = quantum_integer(1);

RatFunc at(const SymFunc<RatFunc>& f, const Partition& l1, const Partition& l2, const Monomial& m) {
  return f.coefficient(SymKey{{l1, l2}, m});
}

SymFunc<NumScalar> lift_all(const NumericQ& field, const SymFunc<RatFunc>& f) {
  return f.map_coefficients<NumScalar>([&](const RatFunc& c) { return field.lift(c); });
}

}  // namespace

TEST_CASE("vertex examples") {
  Specializer<SymbolicQ> sp;
  CHECK(topological_vertex(sp, {}, {}, {}) == RatFunc(1));
  CHECK(topological_vertex(sp, {}, {1}, {}) == RatFunc(1) / z);
  CHECK(topological_vertex(sp, {1}, {}, {}) == RatFunc(1) / z);
  CHECK(framed_vertex(sp, {}, {}, {}, 0, 0, 0) == RatFunc(1));
  CHECK(framed_vertex(sp, {1}, {}, {}, -1, 0, 0) == topological_vertex(sp, {1}, {}, {}));
  CHECK(framed_vertex(sp, {2}, {}, {}, -1, 0, 0) == RatFunc::t_pow(-2) * topological_vertex(sp, {2}, {}, {}));
}

TEST_CASE("vertex cyclic symmetry and one-leg values") {
  Specializer<SymbolicQ> sp;
  const auto ps = enumerate_partitions(3);
  for (const auto& a : ps)
    for (const auto& b : ps)
      for (const auto& c : ps) {
        if (a.size() + b.size() + c.size() > 4) continue;
        const RatFunc v = topological_vertex(sp, a, b, c);
        CHECK(v == topological_vertex(sp, b, c, a));
        CHECK(v == topological_vertex(sp, c, a, b));
      }
  for (const auto& l : enumerate_partitions(4)) {
    CHECK(topological_vertex(sp, {}, l, {}) == sp.schur(l));
    CHECK(topological_vertex(sp, l, {}, {}) == sp.schur(l));
    CHECK(topological_vertex(sp, {}, {}, l) == sp.schur(l));
  }
}

TEST_CASE("strip geometry") {
  CHECK_THROWS_AS(StripGeometry(""), InvalidInput);
  CHECK_THROWS_AS(StripGeometry("BA"), InvalidInput);
  CHECK_THROWS_AS(StripGeometry("AC"), InvalidInput);
  const StripGeometry s("AAB");
  CHECK(s.size() == 3);
  CHECK(s.type(3) == VertexType::B);
  CHECK(s.word() == "AAB");
  CHECK(s.kahler_names() == std::vector<std::string>{"Q_1", "Q_2"});
  CHECK(s.q_path(1, 3) == Monomial{1, 1});
  CHECK(s.q_path(2, 3) == Monomial{0, 1});
  CHECK(s.q_path(2, 2) == Monomial{0, 0});
}

TEST_CASE("strip parameters") {
  const auto ab = strip_params(StripGeometry("AB"));
  CHECK(ab.alphas == std::vector<Monomial>{{0}});
  CHECK(ab.betas == std::vector<Monomial>{{1}});
  const auto a = strip_params(StripGeometry("A"));
  CHECK(a.alphas == std::vector<Monomial>{Monomial{}});
  CHECK(a.betas.empty());
  const auto aab = strip_params(StripGeometry("AAB"));
  CHECK(aab.alphas == std::vector<Monomial>{{0, 0}, {1, 0}});
  CHECK(aab.betas == std::vector<Monomial>{{1, 1}});
}

TEST_CASE("mirror curves") {
  const auto con = mirror_and_quantum(StripGeometry("AB"));
  CHECK(con.classical_string() == "y*(1 - x) + (1 - Q_1*x)");
  REQUIRE(con.a_coeffs.size() == 2);
  CHECK(con.a_coeffs[1].coefficient({0}) == RatFunc(-1));
  CHECK(con.b_coeffs[1].coefficient({1}) == RatFunc(-1));
  CHECK(mirror_and_quantum(StripGeometry("A")).classical_string() == "y*(1 - x) + 1");
  for (std::size_t i = 0; i < con.quantum_a_coeffs.size(); ++i)
    CHECK(at_q_one(con.quantum_a_coeffs[i]) == con.a_coeffs[i]);
}

TEST_CASE("one vertex") {
  const auto zc = glue_strip(SymbolicQ{}, StripGeometry("A"), 3, Branes::One);
  CHECK(at(zc, {1}, {}, {}) == RatFunc(1) / z);
  for (const auto& [k, c] : zc.terms()) CHECK(k.slots[1].empty());
  CHECK(at(zc, {}, {}, {}) == RatFunc(1));
}

TEST_CASE("closed sector") {
  const int cap = 3;
  const RatFunc w = RatFunc(1) / (z * z);
  {
    const auto zc = glue_strip(SymbolicQ{}, StripGeometry("AB"), cap);
    const auto closed = zc.coefficient(std::vector<Partition>(2));
    CHECK(closed.coefficient({0}) == RatFunc(1));
    // Exp(-Q/{1}^2): the Q coefficient is -1/{1}^2
    CHECK(closed.coefficient({1}) == -w);
    const auto expected = convert(closed_form(SymbolicQ{}, StripGeometry("AB"), cap), Basis::Schur);
    CHECK(expected.coefficient(std::vector<Partition>(2)).constant_term() == RatFunc(1));
  }
  {
    const auto zc = glue_strip(SymbolicQ{}, StripGeometry("AA"), cap);
    const auto closed = zc.coefficient(std::vector<Partition>(2));
    CHECK(closed.coefficient({1}) == w);
  }
}

TEST_CASE("conifold open amplitude") {
  const auto zo = z_open(glue_strip(SymbolicQ{}, StripGeometry("AB"), 2));
  CHECK(at(zo, {}, {}, {0}) == RatFunc(1));
  // (1 - Q_1)/{1} with this module's brane sign
  CHECK(at(zo, {1}, {}, {0}) == RatFunc(1) / z);
  CHECK(at(zo, {1}, {}, {1}) == -RatFunc(1) / z);
}

TEST_CASE("kernel agrees with the serial reference") {
  for (const char* w : {"A", "AB", "AA", "ABA", "AAB", "ABB"}) {
    const StripGeometry s(w);
    const auto fast = glue_strip(SymbolicQ{}, s, 3);
    CHECK(fast == glue_strip_reference(SymbolicQ{}, s, 3));
    CHECK(fast == glue_strip(SymbolicQ{}, s, 3, Branes::Two, calibrated_convention(), Direction::RightToLeft));
    const auto one = glue_strip(SymbolicQ{}, s, 3, Branes::One);
    CHECK(one == glue_strip_reference(SymbolicQ{}, s, 3, Branes::One));
  }
}

TEST_CASE("numeric gluing is the evaluation of the symbolic gluing") {
  const auto field = NumericQ::from_q(frac(4, 9));
  for (const char* w : {"AB", "ABA"}) {
    const StripGeometry s(w);
    CHECK(glue_strip(field, s, 3) == lift_all(field, glue_strip(SymbolicQ{}, s, 3)));
    CHECK(closed_form(field, s, 3) == lift_all(field, closed_form(SymbolicQ{}, s, 3)));
  }
}

TEST_CASE("closed form") {
  for (const char* w : {"A", "AB", "ABBA"}) {
    const auto cf = closed_form(SymbolicQ{}, StripGeometry(w), 3);
    CHECK(cf.coefficient(std::vector<Partition>(2)).constant_term() == RatFunc(1));
    CHECK(cf.coefficient(std::vector<Partition>(2)).size() == 1);
  }
  // one vertex: Exp on L1 and Expp on L2
  const auto a = closed_form(SymbolicQ{}, StripGeometry("A"), 3);
  CHECK(at(a, {2}, {}, {}) == RatFunc::t_pow(1) / (z * quantum_integer(2)));
  CHECK(at(a, {}, {1, 1}, {}) == RatFunc::t_pow(1) / (z * quantum_integer(2)));
}

TEST_CASE("two-leg vertex") {
  const auto v = two_leg_vertex_series(SymbolicQ{}, 3);
  CHECK(at(v, {}, {}, {}) == RatFunc(1));
  CHECK(at(v, {1}, {}, {}) == RatFunc(1) / z);
  CHECK(at(v, {}, {1}, {}) == RatFunc(1) / z);
  CHECK(v == two_leg_product_formula(SymbolicQ{}, 3));
}

TEST_CASE("gluing calibration") {
  std::vector<std::string> words;
  for (int len = 1; len <= 4; ++len)
    for (int mask = 0; mask < (1 << (len - 1)); ++mask) {
      std::string w = "A";
      for (int i = 0; i < len - 1; ++i) w += (mask >> i) & 1 ? 'B' : 'A';
      words.push_back(w);
    }
  // C is cyclically symmetric, so each vertex placement is determined up to a
  // rotation of its three slots: expect exactly the 3 x 3 rotations of one convention
  auto rotated = [](VertexConvention v, int r) {
    v.left_slot = (v.left_slot + r) % 3;
    v.right_slot = (v.right_slot + r) % 3;
    return v;
  };
  std::vector<GluingConvention> expected;
  const auto base = calibrated_convention();
  for (int ra = 0; ra < 3; ++ra)
    for (int rb = 0; rb < 3; ++rb) {
      auto c = base;
      c.a = rotated(base.a, ra);
      c.b = rotated(base.b, rb);
      expected.push_back(c);
    }
  auto found = calibrate_gluing(NumericQ::from_q(frac(9, 4)), words, 3);
  auto key = [](const GluingConvention& c) {
    return std::tuple(c.a.left_slot, c.a.right_slot, c.b.left_slot, c.b.right_slot, c.a.left_framing,
                      c.a.right_framing, c.b.left_framing, c.b.right_framing, c.edge_sign);
  };
  auto order = [&](const GluingConvention& x, const GluingConvention& y) { return key(x) < key(y); };
  std::sort(found.begin(), found.end(), order);
  std::sort(expected.begin(), expected.end(), order);
  CHECK(found == expected);
}
