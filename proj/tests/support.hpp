#pragma once

#include <gmpxx.h>

#include <random>

#include "anomaly/graded_polynomial.hpp"
#include "anomaly/puiseux_series.hpp"

namespace testing {

using namespace anomaly;

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  return Rational(num(rng), den(rng));
}

inline GaussianRational small_gaussian(std::mt19937& rng, bool real_only = false) {
  if (real_only) return small_rational(rng);
  return {small_rational(rng), small_rational(rng)};
}

/// Random element of weight <= W with up to `terms` monomials.
inline GradedPolynomial random_poly(std::mt19937& rng, const TablePtr& table, int W, int terms, bool real_only = false) {
  GradedPolynomial p(table, W);
  std::uniform_int_distribution<std::size_t> pick(0, table->size() - 1);
  std::uniform_int_distribution<int> len(0, 3);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int factors = len(rng);
    for (int f = 0; f < factors; ++f) ++m[pick(rng)];
    p.add_term(m, small_gaussian(rng, real_only));
  }
  return p;
}

inline QSeries random_qseries(std::mt19937& rng, int order, int step, bool unit_constant) {
  QSeries s(order);
  for (int k = 0; k <= order; k += step) s.add_to(k, small_gaussian(rng, true));
  if (unit_constant) {
    s.add_to(0, GaussianRational(1) - s.coefficient(0));
  }
  return s;
}

inline mpq_class mpq(const Rational& r) { return r.value(); }

}  // namespace testing
