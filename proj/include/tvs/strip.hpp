#pragma once

#include <string>
#include <vector>

#include "tvs/ratfunc.hpp"
#include "tvs/series.hpp"

namespace tvs {

enum class VertexType { A, B };

/// Linear chain of trivalent vertices v_1..v_n joined by internal edges with
/// Kahler parameters Q_1..Q_{n-1}. Brane L1 sits on the left external leg of
/// v_1, brane L2 on the right external leg of v_n.
class StripGeometry {
 public:
  explicit StripGeometry(const std::string& word);

  int size() const { return static_cast<int>(types_.size()); }
  VertexType type(int k) const { return types_[static_cast<std::size_t>(k - 1)]; }  // 1-based
  const std::vector<VertexType>& types() const { return types_; }
  std::string word() const;
  /// "Q_1", ..., "Q_{n-1}".
  std::vector<std::string> kahler_names() const;

  /// Grading on Q_1..Q_{n-1}, each of the given weight.
  GradingPtr grading(int cap, int q_weight = 1) const;
  /// Q_{i,j} = prod_{l=i}^{j-1} Q_l for i < j, and 1 otherwise (1-based).
  Monomial q_path(int i, int j) const;

 private:
  std::vector<VertexType> types_;
};

/// alpha_i = Q_{1,i} over type-A vertices, beta_j = Q_{1,j} over type-B vertices.
struct StripParams {
  std::vector<Monomial> alphas;
  std::vector<Monomial> betas;
};
StripParams strip_params(const StripGeometry& strip);

/// Classical curve y * sum_i A_i x^i + sum_j B_j x^j with A_i = (-1)^i e_i(alpha),
/// B_j = (-1)^j e_j(beta), and its quantization
///   y_hat * prod_i (1 - alpha_i t x_hat) + prod_j (1 - beta_j t x_hat),
/// stored as the coefficient lists of the two x-polynomials. On the polynomial
/// representation y_hat acts by f(x) -> -f(qx) and stands to the left.
struct MirrorCurve {
  GradingPtr grading;
  std::vector<NovikovSeries<RatFunc>> a_coeffs;          // A_i
  std::vector<NovikovSeries<RatFunc>> b_coeffs;          // B_j
  std::vector<NovikovSeries<RatFunc>> quantum_a_coeffs;  // A_i t^i
  std::vector<NovikovSeries<RatFunc>> quantum_b_coeffs;  // B_j t^j
  std::string shift_convention = "y f(x) = -f(q x), shift outermost";

  /// Human-readable classical polynomial, e.g. "y*(1 - x) + (1 - Q_1*x)".
  std::string classical_string() const;
};

/// Coefficients of prod_i (1 - m_i X) as series in the formal parameters.
std::vector<NovikovSeries<RatFunc>> elementary_expansion(const GradingPtr& g, const std::vector<Monomial>& ms);

MirrorCurve mirror_and_quantum(const StripGeometry& strip);

/// Evaluates every coefficient at t = 1 (q = 1).
NovikovSeries<RatFunc> at_q_one(const NovikovSeries<RatFunc>& s);

}  // namespace tvs
