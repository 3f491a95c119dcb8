#pragma once

// Assembly of the P-series, theorem verification and the 2-adic audit.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "anomaly/kvirt.hpp"
#include "anomaly/modforms.hpp"

namespace anomaly {

struct Setting {
  SettingKind kind = SettingKind::Spin4k;
  int k = 1;
  int l = 1;
  int q_order = 0;

  int weight() const { return kind == SettingKind::Spinc4k2 ? 2 * k + 1 : 2 * k; }
  int series_order() const { return kLatticePerQ * q_order; }
};

int default_q_order(int k);
/// Smallest q-order leaving at least 2k+3 checked coefficients after solving for the h_r.
int min_q_order(int k);
/// Validates ranges; q_order 0 selects the default.
Setting make_setting(SettingKind kind, int k, int l, int q_order = 0);

enum class PSeries { P1, P2, P3 };

/// Weight-W component of the assembled theta product, after the setting's constraint.
std::shared_ptr<const PolySeries> build_P(const Setting& s, PSeries which);

enum class Role { Required, Variant, Info };
enum class Status { Pass, Fail, PassWithVariant };

std::string to_string(Role r);
std::string to_string(Status s);

struct Residual {
  std::string name;
  Role role = Role::Required;
  /// For variants: the required residual this one stands in for.
  std::string variant_of;
  bool zero = true;
  std::string value;
};

struct VerificationReport {
  std::string theorem;
  Setting setting;
  std::vector<GradedPolynomial> h;
  std::vector<std::vector<Rational>> solve_coeffs;
  bool integral = true;
  std::vector<Residual> residuals;
  std::vector<std::string> notes;
  Status status = Status::Fail;
  std::optional<double> seconds;

  const Residual* find(std::string_view name) const;
};

const std::vector<std::string>& theorem_ids();
SettingKind theorem_setting(std::string_view id);
/// k is forced to 2 for 3.3 and to 3 for 3.4.
VerificationReport verify_theorem(std::string_view id, int k, int l, int q_order = 0);

/// Theta path minus bundle path for one q-coefficient (lattice exponent 0, 4 or 8).
GradedPolynomial cross_check_bundle_expansion(const Setting& s, PSeries which, int exponent);

struct DivisibilityTerm {
  int r = 0;
  int exponent = 0;
};

struct DivisibilityAudit {
  std::string corollary;
  int m = 0;
  int k = 1;
  int l = 2;
  int assumed_v2_h = 1;
  std::vector<DivisibilityTerm> terms;
  /// Empty when the sum has no terms (trivially divisible).
  std::optional<int> implied_exponent;
  int claimed_exponent = 0;
  bool gap = false;
  std::optional<bool> integral;
};

const std::vector<std::string>& corollary_ids();
DivisibilityAudit divisibility_check(std::string_view cor, int m, int l, int assumed_v2_h = 1,
                                     bool check_integrality = true);

/// Versioned JSON (schema 1) and the text view derived from it.
std::string report_json(const VerificationReport& r, bool pretty = true);
std::string audit_json(const DivisibilityAudit& a, bool pretty = true);
std::string render_text(const std::string& json);

}  // namespace anomaly
