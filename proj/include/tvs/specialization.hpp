#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "tvs/field.hpp"
#include "tvs/partition.hpp"

namespace tvs {

/// Principal specializations x_i = q^{nu_i - i + 1/2} of complete and skew
/// Schur functions, as exact scalars of the field. Results are memoized per
/// instance; the cache is guarded, so one instance may serve several threads.
template <class Field>
class Specializer {
 public:
  using S = typename Field::scalar;

  explicit Specializer(Field field = Field()) : field_(std::move(field)) {}

  const Field& field() const { return field_; }

  /// h_k(q^rho) = t^{-k} / prod_{j<=k} (1 - t^{-2j}).
  S h_rho(int k) {
    if (k < 0) return S();
    std::lock_guard lock(mu_);
    return h_rho_locked(k);
  }

  /// h_k(q^{nu+rho}): the tail h(q^rho) convolved with the finite head
  /// prod_i (1 - t^{-2i+1} T) / (1 - t^{2 nu_i - 2i + 1} T).
  S h(int k, const Partition& nu) {
    if (k < 0) return S();
    if (k == 0) return S(1);
    std::lock_guard lock(mu_);
    auto key = std::make_pair(k, nu);
    if (auto it = h_cache_.find(key); it != h_cache_.end()) return it->second;
    std::vector<S> head(static_cast<std::size_t>(k) + 1);
    head[0] = S(1);
    for (int i = 1; i <= nu.length(); ++i) {
      const S a = field_.t_pow(-2 * i + 1);
      const S b = field_.t_pow(2 * nu[i - 1] - 2 * i + 1);
      for (int j = k; j >= 1; --j) head[static_cast<std::size_t>(j)] -= a * head[static_cast<std::size_t>(j - 1)];
      for (int j = 1; j <= k; ++j) head[static_cast<std::size_t>(j)] += b * head[static_cast<std::size_t>(j - 1)];
    }
    S total;
    for (int j = 0; j <= k; ++j)
      if (!head[static_cast<std::size_t>(j)].is_zero()) total += head[static_cast<std::size_t>(j)] * h_rho_locked(k - j);
    h_cache_.emplace(std::move(key), total);
    return total;
  }

  /// s_{lambda/mu}(q^{nu+rho}) by Jacobi-Trudi, det(h_{lambda_i - mu_j - i + j}).
  S skew(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!lambda.contains(mu)) return S();
    const int n = lambda.length();
    if (n == 0) return S(1);
    std::vector<std::vector<S>> m(static_cast<std::size_t>(n), std::vector<S>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h(lambda[i] - mu[j] - i + j, nu);
    return determinant(m);
  }

  S schur(const Partition& lambda, const Partition& nu = {}) { return skew(lambda, Partition(), nu); }

  /// Division-free determinant: rows in order, DP over the set of used columns.
  /// Each new entry's sign counts used columns to its right (inversions).
  static S determinant(const std::vector<std::vector<S>>& m) {
    const std::size_t n = m.size();
    std::vector<S> dp(std::size_t{1} << n);
    dp[0] = S(1);
    for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
      if (dp[mask].is_zero()) continue;
      const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
      for (std::size_t col = 0; col < n; ++col) {
        if (mask & (std::size_t{1} << col)) continue;
        const S& e = m[row][col];
        if (e.is_zero()) continue;
        const int above = __builtin_popcountll(mask >> (col + 1));
        S v = dp[mask] * e;
        if (above % 2) v = -v;
        dp[mask | (std::size_t{1} << col)] += v;
      }
    }
    return dp.back();
  }

 private:
  S h_rho_locked(int k) {
    while (static_cast<int>(rho_.size()) <= k) {
      const int j = static_cast<int>(rho_.size());
      if (j == 0) {
        rho_.push_back(S(1));
        continue;
      }
      // h_j = h_{j-1} * t^{-1} / (1 - t^{-2j})
      S v = rho_.back() * field_.t_pow(-1);
      v /= S(1) - field_.t_pow(-2 * j);
      rho_.push_back(std::move(v));
    }
    return rho_[static_cast<std::size_t>(k)];
  }

  Field field_;
  std::mutex mu_;
  std::vector<S> rho_;
  std::map<std::pair<int, Partition>, S> h_cache_;
};

/// Checks s_{l/m}(q^rho) = (-1)^{|l|-|m|} s_{l^t/m^t}(q^{-rho}) with symbolic q.
inline bool sign_transpose_check(const Partition& lambda, const Partition& mu) {
  Specializer<SymbolicQ> spec;
  const RatFunc lhs = spec.skew(lambda, mu, {});
  RatFunc rhs = spec.skew(lambda.transpose(), mu.transpose(), {}).substitute(-1, 1);
  if ((lambda.size() - mu.size()) % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

}  // namespace tvs
