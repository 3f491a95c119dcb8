#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "anomaly/rational.hpp"

namespace anomaly {

enum class NewtonDirection { PowerSumToElementary, ElementaryToPowerSum };

/// Newton's identities over any commutative ring R that accepts rational
/// scaling. Element i of `coeffs` holds s_{i+1} (resp. e_{i+1}); the result has
/// the same length. Elementary symmetric functions beyond `n_roots` are zero,
/// both on input and on output.
template <class R>
std::vector<R> newton_convert(std::span<const R> coeffs, int n_roots, NewtonDirection direction) {
  if (n_roots < 1) throw std::invalid_argument("newton_convert needs at least one root");
  const int m_max = static_cast<int>(coeffs.size());
  std::vector<R> out(coeffs.size());
  auto sign = [](int i) { return (i % 2 == 1) ? GaussianRational(1) : GaussianRational(-1); };  // (-1)^{i-1}

  if (direction == NewtonDirection::ElementaryToPowerSum) {
    auto e = [&](int i) -> R { return i <= n_roots ? coeffs[i - 1] : R{}; };
    // s_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i s_{m-i} + (-1)^{m-1} m e_m
    for (int m = 1; m <= m_max; ++m) {
      R s = e(m) * (sign(m) * GaussianRational(m));
      for (int i = 1; i < m; ++i) s += e(i) * out[m - i - 1] * sign(i);
      out[m - 1] = std::move(s);
    }
  } else {
    // m e_m = sum_{i=1}^{m} (-1)^{i-1} e_{m-i} s_i, e_0 = 1
    for (int m = 1; m <= m_max; ++m) {
      if (m > n_roots) {
        out[m - 1] = R{};
        continue;
      }
      R e = coeffs[m - 1] * sign(m);
      for (int i = 1; i < m; ++i) e += out[m - i - 1] * coeffs[i - 1] * sign(i);
      out[m - 1] = e * GaussianRational(Rational(1, m));
    }
  }
  return out;
}

}  // namespace anomaly
