#include "theta_sums.hpp"

#include <stdexcept>

namespace oracle {

Biv Biv::operator*(const Biv& o) const {
  Biv out(std::min(z_bound, o.z_bound), std::min(q_bound, o.q_bound));
  for (int d1 = 0; d1 <= out.z_bound; ++d1)
    for (int k1 = 0; k1 <= out.q_bound; ++k1) {
      if (c[d1][k1] == 0) continue;
      for (int d2 = 0; d1 + d2 <= out.z_bound; ++d2)
        for (int k2 = 0; k1 + k2 <= out.q_bound; ++k2) out.c[d1 + d2][k1 + k2] += c[d1][k1] * o.c[d2][k2];
    }
  return out;
}

Biv Biv::inverse() const {
  if (c[0][0] == 0) throw std::domain_error("oracle: constant term is zero");
  Biv g(z_bound, q_bound);
  const mpq_class inv0 = 1 / c[0][0];
  for (int d = 0; d <= z_bound; ++d)
    for (int k = 0; k <= q_bound; ++k) {
      if (d == 0 && k == 0) {
        g.c[0][0] = inv0;
        continue;
      }
      mpq_class acc;
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= k; ++j) {
          if (i == 0 && j == 0) continue;
          acc += c[i][j] * g.c[d - i][k - j];
        }
      g.c[d][k] = -inv0 * acc;
    }
  return g;
}

namespace {

mpq_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return mpq_class(f);
}

mpq_class ipow(long a, int e) {
  mpz_class r = 1;
  for (int i = 0; i < e; ++i) r *= a;
  return mpq_class(r);
}

// cos(a z), or sin(a z)/z, as even coefficients.
void add_cos(Biv& b, long a, int k, const mpq_class& w) {
  for (int m = 0; 2 * m <= b.z_bound; ++m)
    b.c[2 * m][k] += w * (m % 2 ? -1 : 1) * ipow(a, 2 * m) / factorial(2 * m);
}

void add_sinc(Biv& b, long a, int k, const mpq_class& w) {
  for (int m = 0; 2 * m <= b.z_bound; ++m)
    b.c[2 * m][k] += w * (m % 2 ? -1 : 1) * ipow(a, 2 * m + 1) / factorial(2 * m + 1);
}

Biv scalar_series(const std::vector<mpq_class>& s, int z_bound) {
  Biv b(z_bound, static_cast<int>(s.size()) - 1);
  for (std::size_t k = 0; k < s.size(); ++k) b.c[0][k] = s[k];
  return b;
}

// Σ_{n≥0} (±1)^n q^{(4n²+4n)/8} f((2n+1)z), the q^{1/8} prefactor removed.
Biv odd_sum(int order, int z_bound, bool alternating, bool sine) {
  Biv b(z_bound, order);
  for (long n = 0; 4 * n * n + 4 * n <= order; ++n) {
    const mpq_class w = (alternating && n % 2) ? -1 : 1;
    if (sine)
      add_sinc(b, 2 * n + 1, static_cast<int>(4 * n * n + 4 * n), w);
    else
      add_cos(b, 2 * n + 1, static_cast<int>(4 * n * n + 4 * n), w);
  }
  return b;
}

// 1 + 2Σ_{n≥1} (±1)^n q^{n²/2} cos(2nz).
Biv even_sum(int order, int z_bound, bool alternating) {
  Biv b(z_bound, order);
  b.c[0][0] = 1;
  for (long n = 1; 4 * n * n <= order; ++n) add_cos(b, 2 * n, static_cast<int>(4 * n * n), (alternating && n % 2) ? -2 : 2);
  return b;
}

std::vector<mpq_class> at_zero(const Biv& b) {
  std::vector<mpq_class> out(b.q_bound + 1);
  for (int k = 0; k <= b.q_bound; ++k) out[k] = b.c[0][k];
  return out;
}

}  // namespace

std::vector<mpq_class> theta_null(Null which, int order) {
  std::vector<mpq_class> s(order + 1);
  switch (which) {
    case Null::Theta1:
      for (long n = 0; (2 * n + 1) * (2 * n + 1) <= order; ++n) s[(2 * n + 1) * (2 * n + 1)] += 1;
      break;
    case Null::ThetaPrime:
      for (long n = 0; (2 * n + 1) * (2 * n + 1) <= order; ++n)
        s[(2 * n + 1) * (2 * n + 1)] += (n % 2 ? -1 : 1) * (2 * n + 1);
      break;
    case Null::Theta2:
    case Null::Theta3:
      s[0] = 1;
      for (long n = 1; 4 * n * n <= order; ++n) s[4 * n * n] += (which == Null::Theta2 && n % 2) ? -2 : 2;
      break;
  }
  return s;
}

Biv theta_factor(Factor which, int order, int z_bound) {
  const int zb = z_bound + 1;
  switch (which) {
    case Factor::A: {
      Biv num = scalar_series(at_zero(odd_sum(order, 0, true, true)), zb);
      return (num * odd_sum(order, zb, true, true).inverse());
    }
    case Factor::T1: {
      Biv s = odd_sum(order, zb, false, false);
      return s * scalar_series(at_zero(s), zb).inverse();
    }
    case Factor::T2:
    case Factor::T3: {
      Biv s = even_sum(order, zb, which == Factor::T2);
      return s * scalar_series(at_zero(s), zb).inverse();
    }
    case Factor::D: {
      Biv ratio = odd_sum(order, zb, true, true) * scalar_series(at_zero(odd_sum(order, 0, true, true)), zb).inverse();
      Biv out(zb, order);
      for (int d = 0; d < zb; ++d) out.c[d + 1] = ratio.c[d];
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace oracle
