#pragma once

// Level-2 modular forms: the δ/ε generators, the weight-2k bases over Γ₀(2)
// and Γ⁰(2), and the triangular decomposition of a q-expansion in the Γ⁰(2)
// basis.

#include <string>
#include <vector>

#include "anomaly/puiseux_series.hpp"

namespace anomaly {

enum class DeltaEps { Delta1, Eps1, Delta2, Eps2 };
/// Gamma0 is Γ₀(2) (c ≡ 0 mod 2), GammaUpper is Γ⁰(2) (b ≡ 0 mod 2).
enum class Group { Gamma0, GammaUpper };

std::string to_string(DeltaEps which);
std::string to_string(Group g);
DeltaEps parse_delta_eps(std::string_view name);

QSeries delta_eps(DeltaEps which, int order);

/// (8δ)^{k-2r} ε^r over the given group.
QSeries basis_element(Group group, int k, int r, int order);

template <class C>
struct Decomposition {
  std::vector<C> h;
  PuiseuxSeries<C> residual;
  /// h_r = Σ_i solve_coeffs[r][i] · (coefficient of q^{i/2}).
  std::vector<std::vector<Rational>> solve_coeffs;
  bool integral = true;
};

namespace detail {

/// Σ_k c·b_k q^k for a scalar series b.
template <class C>
PuiseuxSeries<C> scale_series(const C& c, const QSeries& b) {
  PuiseuxSeries<C> out(b.order_bound());
  if (is_zero(c)) return out;
  for (const auto& [k, bk] : b.terms()) out.add_to(k, c * bk);
  return out;
}

}  // namespace detail

/// Triangular solve of P = Σ_r h_r (8δ₂)^{k-2r} ε₂^r from the q^{r/2}
/// coefficients, residual kept to the full order bound of P.
template <class C>
Decomposition<C> decompose(const PuiseuxSeries<C>& P, int k) {
  if (k < 0) throw std::invalid_argument("negative modular weight");
  if (!P.on_lattice(kHalfStep)) throw std::domain_error("decomposition needs exponents on the 1/2 lattice");
  const int R = k / 2;
  const int order = P.order_bound();
  if (order < kLatticePerQ * (R + 1))
    throw TruncationError("series order " + std::to_string(order) + " too small to decompose weight " +
                          std::to_string(2 * k));

  std::vector<QSeries> basis;
  for (int r = 0; r <= R; ++r) basis.push_back(basis_element(Group::GammaUpper, k, r, order));

  Decomposition<C> out;
  out.h.resize(R + 1);
  out.solve_coeffs.assign(R + 1, std::vector<Rational>(R + 1));
  for (int j = 0; j <= R; ++j) {
    const GaussianRational lead = basis[j].coefficient(kHalfStep * j);
    if (!lead.is_real() || lead.re().abs() != Rational(1)) throw std::logic_error("basis is not unitriangular");
    const Rational inv = Rational(1) / lead.re();
    C acc = P.coefficient(kHalfStep * j);
    std::vector<Rational> row(R + 1);
    row[j] = Rational(1);
    for (int r = 0; r < j; ++r) {
      const GaussianRational b = basis[r].coefficient(kHalfStep * j);
      if (b.is_zero()) continue;
      if (!is_zero(out.h[r])) acc -= out.h[r] * b;
      for (int i = 0; i <= R; ++i) row[i] -= b.re() * out.solve_coeffs[r][i];
    }
    out.h[j] = acc * GaussianRational(inv);
    for (auto& v : row) {
      v *= inv;
      if (!v.is_integer()) out.integral = false;
    }
    out.solve_coeffs[j] = std::move(row);
  }

  out.residual = P;
  for (int r = 0; r <= R; ++r) out.residual -= detail::scale_series(out.h[r], basis[r]);
  return out;
}

/// P₁ − 2^l Σ_r h_r (8δ₁)^{k-2r} ε₁^r.
template <class C>
PuiseuxSeries<C> transfer_check(const PuiseuxSeries<C>& P1, const std::vector<C>& h, int l, int k) {
  if (static_cast<int>(h.size()) != k / 2 + 1) throw std::invalid_argument("h has the wrong length");
  const int order = P1.order_bound();
  PuiseuxSeries<C> out = P1;
  const GaussianRational scale(Rational::pow2(l));
  for (int r = 0; r <= k / 2; ++r) {
    QSeries b = basis_element(Group::Gamma0, k, r, order);
    b.scale(scale);
    out -= detail::scale_series(h[r], b);
  }
  return out;
}

}  // namespace anomaly
