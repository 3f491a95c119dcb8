#pragma once

// q-expansions of the Jacobi theta functions in the normalized variable z = πv.
//
// Normalization constants are kept out of every series: the θ₁ null value is
// returned divided by 2 and θ'(0,τ) divided by 2π, so no π is ever represented.
// Per-root factors are bivariate truncated series in z and q.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "anomaly/puiseux_series.hpp"

namespace anomaly {

enum class Parity { Even, Odd, Mixed };

std::string to_string(Parity p);

/// Bivariate truncated series: slice d is the q-series multiplying z^d.
class RootFactor {
 public:
  RootFactor(int z_bound, int q_bound);
  /// Lifts a z-series with scalar coefficients (no q dependence).
  static RootFactor from_z_series(std::span<const GaussianRational> coeffs, int z_bound, int q_bound);

  int z_bound() const { return z_bound_; }
  int q_bound() const { return q_bound_; }
  const QSeries& slice(int d) const { return slices_.at(static_cast<std::size_t>(d)); }
  void set_slice(int d, QSeries s);
  GaussianRational coefficient(int d, int k) const { return slice(d).coefficient(k); }
  /// The q^0 slice as a list of z-coefficients.
  std::vector<GaussianRational> q0_slice() const;
  Parity parity() const;
  bool is_real() const;

  RootFactor operator*(const RootFactor& o) const;
  RootFactor& operator*=(const QSeries& s);
  RootFactor& operator*=(const GaussianRational& c);
  /// Needs an invertible z^0 slice.
  RootFactor inverse() const;
  /// Logarithm; requires the z^0 slice to be exactly 1.
  RootFactor log() const;
  RootFactor sign_flip() const;
  RootFactor real_part() const;

  friend bool operator==(const RootFactor& a, const RootFactor& b) { return a.slices_ == b.slices_; }

 private:
  int z_bound_;
  int q_bound_;
  std::vector<QSeries> slices_;
};

enum class NullKind { Theta1, Theta2, Theta3, ThetaPrime };
enum class FactorKind { A, T1, T2, T3, D };

std::string to_string(NullKind k);
std::string to_string(FactorKind k);
NullKind parse_null_kind(std::string_view name);
FactorKind parse_factor_kind(std::string_view name);

struct ThetaNull {
  NullKind kind;
  /// Series with the normalization stripped.
  QSeries reduced;
  /// full = rational_factor · π^pi_power · reduced.
  Rational rational_factor;
  int pi_power = 0;
};

/// Taylor coefficients of sin z, cos z and e^{az} up to z^z_bound.
std::vector<GaussianRational> taylor_sin(int z_bound);
std::vector<GaussianRational> taylor_cos(int z_bound);
std::vector<GaussianRational> taylor_exp(int z_bound, const GaussianRational& a);

/// Number of product factors used for series order `order` (lattice units).
int product_factor_count(int order);

ThetaNull theta_null(NullKind kind, int order);

/// A = zθ'(0)/θ(z), T_i = θ_i(z)/θ_i(0), D = πθ(z)/θ'(0), all in z = πv.
/// Memoized; if ANOMALY_CACHE_DIR is set, factors are also persisted there.
std::shared_ptr<const RootFactor> theta_factor(FactorKind kind, int order, int z_bound);
/// Uncached construction with `extra_factors` additional product terms.
RootFactor build_theta_factor(FactorKind kind, int order, int z_bound, int extra_factors = 0);

/// Residual of θ'(0)/(2π) − (θ₁(0)/2)·θ₂(0)·θ₃(0).
QSeries jacobi_residual(const QSeries& theta_prime_reduced, const QSeries& theta1_reduced, const QSeries& theta2,
                        const QSeries& theta3);
QSeries jacobi_check(int order);

/// Text serialization used by the on-disk cache.
std::string serialize_factor(const RootFactor& f);
RootFactor deserialize_factor(std::string_view text);

}  // namespace anomaly
