#pragma once

#include <random>
#include <vector>

#include "tvs/ratfunc.hpp"
#include "tvs/series.hpp"

namespace testing {

using tvs::Laurent;
using tvs::RatFunc;
using tvs::Rational;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational small_rational() {
  int n = uniform(-5, 5);
  if (n == 0) n = 1;
  return tvs::frac(n, uniform(1, 4));
}

inline Laurent random_laurent(int lo, int hi, int terms) {
  Laurent p;
  for (int i = 0; i < terms; ++i) p += Laurent::monomial(uniform(lo, hi), small_rational());
  return p;
}

/// Random a-dependent numerator over a product of quantum integers and, at
/// times, a random non-cyclotomic-looking polynomial.
inline RatFunc random_ratfunc() {
  std::vector<RatFunc::Slice> slices;
  const int na = uniform(1, 2);
  for (int i = 0; i < na; ++i) {
    Laurent p = random_laurent(-3, 3, uniform(1, 3));
    if (!p.is_zero()) slices.emplace_back(uniform(-2, 2), p);
  }
  RatFunc r = RatFunc::from_slices(slices);
  const int nd = uniform(0, 2);
  for (int i = 0; i < nd; ++i) r /= tvs::quantum_integer(uniform(1, 4));
  if (uniform(0, 2) == 0) {
    Laurent d = Laurent(1) + Laurent::monomial(1, Rational(uniform(1, 3))) + Laurent::monomial(3, Rational(1));
    r /= RatFunc::from_laurent_t(d);
  }
  return r;
}

/// Schoolbook division of polynomials given by ascending coefficient lists.
/// Returns quotient and remainder.
inline std::pair<std::vector<Rational>, std::vector<Rational>> long_division(std::vector<Rational> num,
                                                                             const std::vector<Rational>& den) {
  std::vector<Rational> quo(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  for (int i = static_cast<int>(num.size()) - static_cast<int>(den.size()); i >= 0; --i) {
    const Rational c = num[static_cast<std::size_t>(i) + den.size() - 1] / den.back();
    quo[static_cast<std::size_t>(i)] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[static_cast<std::size_t>(i) + j] -= c * den[j];
  }
  num.resize(den.size() - 1);
  return {quo, num};
}

}  // namespace testing
