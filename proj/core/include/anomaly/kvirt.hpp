#pragma once

// Virtual bundles as (rank, Chern character) pairs with λ-ring operations, and
// the Θ-objects built from them as q-series of virtual bundles.

#include <string>

#include "anomaly/genus.hpp"

namespace anomaly {

class VirtualBundle {
 public:
  VirtualBundle() = default;
  /// Takes the rank from the weight-0 part of ch.
  explicit VirtualBundle(GradedPolynomial ch);

  static VirtualBundle trivial(const TablePtr& table, int max_weight, long rank);

  long rank() const { return rank_; }
  const GradedPolynomial& ch() const { return ch_; }
  bool is_zero() const { return ch_.is_zero(); }

  /// ψ^m: scales the weight-w part of ch by m^w.
  VirtualBundle adams(int m) const;
  /// Rational multiple; the rank must stay integral.
  VirtualBundle scaled(const Rational& c) const;

  VirtualBundle& operator+=(const VirtualBundle& o);
  VirtualBundle& operator-=(const VirtualBundle& o);
  friend VirtualBundle operator+(VirtualBundle a, const VirtualBundle& b) { return a += b; }
  friend VirtualBundle operator-(VirtualBundle a, const VirtualBundle& b) { return a -= b; }
  friend VirtualBundle operator-(const VirtualBundle& a);
  /// Tensor product.
  friend VirtualBundle operator*(const VirtualBundle& a, const VirtualBundle& b);
  friend VirtualBundle operator*(const VirtualBundle& a, const GaussianRational& c);
  friend bool operator==(const VirtualBundle& a, const VirtualBundle& b) { return a.ch_ == b.ch_; }

 private:
  long rank_ = 0;
  GradedPolynomial ch_;
};

inline bool is_zero(const VirtualBundle& v) { return v.is_zero(); }
VirtualBundle one_like(const VirtualBundle& sample);
VirtualBundle ring_inverse(const VirtualBundle& v);

using BundleSeries = PuiseuxSeries<VirtualBundle>;

/// Λ_t(E) at t = sign·q^{exponent/8}.
BundleSeries vb_lambda_t(const VirtualBundle& e, int exponent, int sign, int order);
/// S_t(E) at t = q^{exponent/8}.
BundleSeries vb_s_t(const VirtualBundle& e, int exponent, int order);
/// Λ²(E) = (E⊗E − ψ²E)/2.
VirtualBundle vb_lambda2(const VirtualBundle& e);

/// The root bundles of a setting.
struct BundleContext {
  SettingKind kind = SettingKind::Spin4k;
  int k = 1;
  int l = 1;
  TablePtr table;
  int max_weight = 0;

  int tm_roots() const { return kind == SettingKind::Spinc4k2 ? 2 * k + 1 : 2 * k; }
  /// T_C M, with ch Σ 2cos 2z_j.
  VirtualBundle tangent() const;
  /// V_C, with ch Σ 2cos 2w_v.
  VirtualBundle v_bundle() const;
  /// L_R ⊗ C, with ch 2cos 2ũ.
  VirtualBundle line() const;
  VirtualBundle trivial(long rank) const;
  /// Â(TM), ch Δ(M), ch Δ(V), e^{c/2}.
  GradedPolynomial a_hat() const;
  GradedPolynomial spinor_m() const;
  GradedPolynomial spinor_v() const;
  GradedPolynomial exp_half_c() const;
};

BundleContext make_context(SettingKind kind, int k, int l);

enum class ThetaObject { Theta1, Theta2, Theta3, ThetaL, ThetaStar, ThetaStarReduced };
/// V-twists: Λ_{q^n}(Ṽ), Λ_{−q^{n−1/2}}(Ṽ), Λ_{q^{n−1/2}}(Ṽ).
enum class VTwist { None, P1, P2, P3 };

std::string to_string(ThetaObject t);

BundleSeries theta_object(ThetaObject which, VTwist twist, const BundleContext& ctx, int order);

VirtualBundle bundle_coefficient(const BundleSeries& s, int exponent);

}  // namespace anomaly
