#pragma once

// Symmetric functions of formal roots: products and sums of per-root factors
// rewritten in the elementary generators n_i = e_i(z²) of a root family.

#include <vector>

#include "anomaly/graded_polynomial.hpp"
#include "anomaly/puiseux_series.hpp"
#include "anomaly/theta.hpp"

namespace anomaly {

using PolySeries = PuiseuxSeries<GradedPolynomial>;

struct RootFamily {
  Family family = Family::TM;
  int n_roots = 0;
};

enum class GenusKind { AHat, LHat, SpinorCh, ExpHalfC };
enum class SettingKind { Spin4k, Spinc4k, Spinc4k2 };

std::string to_string(SettingKind kind);
SettingKind parse_setting_kind(std::string_view name);

/// Power sums s_m = Σ_j z_j^{2m}, m = 1..count, in the family's generators.
std::vector<GradedPolynomial> power_sums(const TablePtr& table, int max_weight, const RootFamily& fam, int count);

/// ∏_j f(z_j) for an even factor with z⁰ slice exactly 1.
PolySeries prod_over_roots(const RootFactor& f, const RootFamily& fam, const TablePtr& table, int max_weight);

/// Σ_j g(z_j²) for g given by its coefficients g_0, g_1, ... in z².
GradedPolynomial additive_over_roots(const std::vector<GaussianRational>& g, const RootFamily& fam,
                                     const TablePtr& table, int max_weight);

/// f(ũ) for the single weight-1 generator u; odd powers allowed.
PolySeries eval_at_var(const RootFactor& f, const TablePtr& table, int max_weight);

/// Â = ∏ z/sin z, L̂ = ∏ 2z cot z, ch(Δ) = ∏ 2cos z (families TM/V), e^{c/2} = e^{iũ} (family U).
GradedPolynomial classical_genus(GenusKind kind, const RootFamily& fam, const TablePtr& table, int max_weight);

/// The first-Pontryagin condition of each setting as a substitution.
GradedPolynomial apply_constraint(const GradedPolynomial& p, SettingKind kind);
PolySeries apply_constraint(const PolySeries& p, SettingKind kind);

/// Term-wise weight component of a series.
PolySeries series_component(const PolySeries& p, int w);

std::string poly_series_str(const PolySeries& s);

}  // namespace anomaly
