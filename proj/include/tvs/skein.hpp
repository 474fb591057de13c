#pragma once

#include <map>
#include <vector>

#include "tvs/report.hpp"
#include "tvs/symfunc.hpp"

namespace tvs {

// Sk_+ of the solid torus is modelled by Lambda with W_lambda = s_lambda.
// Skein elements are one-slot SymFuncs; the longitude P_{0,1} acts by
// multiplication with s_(1) and the meridians act diagonally.

enum class Orientation { Positive, Negative };
enum class PsiForm { Product, Exponential };
enum class Recurrence { Forward, Inverse };

/// C_lambda(q) = sum over cells of q^{content}.
RatFunc content_polynomial(const Partition& lambda);
/// (a - a^{-1})/z.
RatFunc unknot_value();
/// Positive: unknot + z a C_lambda(q). Negative: unknot - z a^{-1} C_lambda(q^{-1}).
RatFunc meridian_eigenvalue(const Partition& lambda, Orientation o);

/// Grading with a single weight-0 parameter "xi"; the cap bounds |lambda|.
GradingPtr dilog_grading(int cap);

/// Psi[xi] for a monomial xi of the grading, in the Schur basis.
/// Product form: coefficient prod_cells (-t^{-c} xi)/{h}; exponential form:
/// Exp(-xi p_1/{1}).
SymFunc<RatFunc> psi(const GradingPtr& g, const Monomial& xi, PsiForm form = PsiForm::Product);
/// Psi[xi]^{-1}: coefficient prod_cells t^{c} xi/{h}, or Exp(xi p_1/{1}).
SymFunc<RatFunc> psi_inverse(const GradingPtr& g, const Monomial& xi, PsiForm form = PsiForm::Product);

/// Applies (unknot - P_{+-1,0} - a^{+-1} xi P_{0,1}) to Psi^{+-1} and reports the
/// coefficient of every s_lambda with |lambda| <= cap.
Report verify_dilog_recurrence(int cap, Recurrence which);

/// Solves the recurrence coefficientwise from c_empty = 1:
///   forward  c_l = -1/(z C_l(q))      sum_{m < l} c_m
///   inverse  c_l =  1/(z C_l(q^{-1})) sum_{m < l} c_m
/// (xi stripped). Partitions of one size are solved in parallel.
std::map<Partition, RatFunc> solve_dilog_recursion(int cap, Recurrence which);

/// prod_i Psi[alpha_i] * prod_j Psi[beta_j]^{-1}, truncated by g.
SymFunc<RatFunc> solution_Z(const std::vector<Monomial>& alphas, const std::vector<Monomial>& betas,
                            const GradingPtr& g, Basis basis = Basis::Schur);

}  // namespace tvs
