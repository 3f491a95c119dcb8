#include "anomaly/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace anomaly {

int default_q_order(int k) { return 2 * k + 4; }

int min_q_order(int k) { return (2 * k + 3 + k / 2 + 1) / 2; }

Setting make_setting(SettingKind kind, int k, int l, int q_order) {
  if (k < 1) throw std::invalid_argument("k must be at least 1 (got " + std::to_string(k) + ")");
  if (l < 1) throw std::invalid_argument("l must be at least 1 (got " + std::to_string(l) + ")");
  if (k > 8 || l > 16) throw std::invalid_argument("k <= 8 and l <= 16 are supported");
  Setting s{kind, k, l, q_order == 0 ? default_q_order(k) : q_order};
  if (s.q_order < min_q_order(k))
    throw TruncationError("q-order " + std::to_string(s.q_order) + " is insufficient for k=" + std::to_string(k) +
                          "; at least " + std::to_string(min_q_order(k)) + " is needed");
  return s;
}

std::string to_string(Role r) {
  switch (r) {
    case Role::Required: return "required";
    case Role::Variant: return "variant";
    case Role::Info: return "info";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::PassWithVariant: return "PASS_WITH_VARIANT";
  }
  return "?";
}

const Residual* VerificationReport::find(std::string_view name) const {
  for (const auto& r : residuals)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

GradedPolynomial attach(const GradedPolynomial& p, const BundleContext& ctx) {
  return p.attached() ? p : GradedPolynomial(ctx.table, ctx.max_weight);
}

GaussianRational pow2(int e) { return GaussianRational(Rational::pow2(e)); }

PolySeries compute_P(const Setting& s, PSeries which) {
  const BundleContext ctx = make_context(s.kind, s.k, s.l);
  const int W = ctx.max_weight;
  const int order = s.series_order();
  const RootFamily tm{Family::TM, ctx.tm_roots()};
  const RootFamily v{Family::V, s.l};
  auto factor = [&](FactorKind f) { return theta_factor(f, order, W); };

  PolySeries x = prod_over_roots(*factor(FactorKind::A), tm, ctx.table, W);
  switch (s.kind) {
    case SettingKind::Spin4k: {
      PolySeries sum = prod_over_roots(*factor(FactorKind::T1), tm, ctx.table, W);
      sum += prod_over_roots(*factor(FactorKind::T2), tm, ctx.table, W);
      sum += prod_over_roots(*factor(FactorKind::T3), tm, ctx.table, W);
      sum.scale(pow2(2 * s.k));
      x = x * sum;
      break;
    }
    case SettingKind::Spinc4k:
      x = x * eval_at_var(*factor(FactorKind::T1), ctx.table, W);
      x = x * eval_at_var(*factor(FactorKind::T2), ctx.table, W);
      x = x * eval_at_var(*factor(FactorKind::T3), ctx.table, W);
      break;
    case SettingKind::Spinc4k2:
      x = x * eval_at_var(*factor(FactorKind::D), ctx.table, W);
      x.scale(GaussianRational::i());
      break;
  }
  PolySeries vpart;
  switch (which) {
    case PSeries::P1:
      vpart = prod_over_roots(*factor(FactorKind::T1), v, ctx.table, W);
      vpart.scale(pow2(s.l));
      break;
    case PSeries::P2: vpart = prod_over_roots(*factor(FactorKind::T2), v, ctx.table, W); break;
    case PSeries::P3: vpart = prod_over_roots(*factor(FactorKind::T3), v, ctx.table, W); break;
  }
  x = (x * vpart).truncated(order);
  return series_component(apply_constraint(x, s.kind), W);
}

}  // namespace

std::shared_ptr<const PolySeries> build_P(const Setting& s, PSeries which) {
  using Key = std::tuple<SettingKind, int, int, int, PSeries>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const PolySeries>> cache;
  const Key key{s.kind, s.k, s.l, s.q_order, which};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const PolySeries>(compute_P(s, which));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, built).first->second;
}

namespace {

struct Pieces {
  BundleContext ctx;
  GradedPolynomial a_hat, spinor_m, spinor_v, exp_half_c;
  VirtualBundle t_red, v_red, line;

  explicit Pieces(const Setting& s) : ctx(make_context(s.kind, s.k, s.l)) {
    a_hat = ctx.a_hat();
    spinor_m = ctx.spinor_m();
    spinor_v = ctx.spinor_v();
    const VirtualBundle t = ctx.tangent();
    t_red = t - ctx.trivial(t.rank());
    const VirtualBundle v = ctx.v_bundle();
    v_red = v - ctx.trivial(v.rank());
    if (s.kind != SettingKind::Spin4k) {
      exp_half_c = ctx.exp_half_c();
      line = ctx.line();
    }
  }

  GradedPolynomial one() const { return GradedPolynomial::constant(ctx.table, ctx.max_weight, GaussianRational(1)); }
  GradedPolynomial scalar(const GaussianRational& c) const {
    return GradedPolynomial::constant(ctx.table, ctx.max_weight, c);
  }
  GradedPolynomial top(const GradedPolynomial& p) const {
    return attach(apply_constraint(attach(p, ctx), ctx.kind).component(ctx.max_weight), ctx);
  }
  /// Â·ch(Δ(M)) + 2^{2k+1}Â
  GradedPolynomial spin_x() const { return a_hat * spinor_m + a_hat * pow2(2 * ctx.k + 1); }
};

Residual poly_residual(std::string name, Role role, const GradedPolynomial& p, std::string variant_of = {}) {
  Residual r;
  r.name = std::move(name);
  r.role = role;
  r.variant_of = std::move(variant_of);
  r.zero = p.is_zero();
  r.value = p.attached() ? p.str() : "0";
  return r;
}

Residual series_residual(std::string name, Role role, const PolySeries& p) {
  Residual r;
  r.name = std::move(name);
  r.role = role;
  r.zero = p.is_zero();
  r.value = r.zero ? "0" : poly_series_str(p);
  return r;
}

/// 2^{l+k} Σ_r 2^{-6r} h_r
GradedPolynomial constant_side(const std::vector<GradedPolynomial>& h, const Setting& s, const BundleContext& ctx) {
  GradedPolynomial out(ctx.table, ctx.max_weight);
  for (std::size_t r = 0; r < h.size(); ++r)
    out += attach(h[r], ctx) * pow2(s.l + s.k - 6 * static_cast<int>(r));
  return out;
}

/// −2^{l+k+6} Σ_r r 2^{-6r} h_r
GradedPolynomial q1_side(const std::vector<GradedPolynomial>& h, const Setting& s, const BundleContext& ctx) {
  GradedPolynomial out(ctx.table, ctx.max_weight);
  for (std::size_t r = 1; r < h.size(); ++r)
    out -= attach(h[r], ctx) * (pow2(s.l + s.k + 6 - 6 * static_cast<int>(r)) * GaussianRational(static_cast<long>(r)));
  return out;
}

GradedPolynomial bundle_path(const Setting& s, const Pieces& pc, PSeries which, int exponent) {
  const VTwist twist = which == PSeries::P1 ? VTwist::P1 : which == PSeries::P2 ? VTwist::P2 : VTwist::P3;
  const int order = std::max(exponent, kHalfStep);
  auto ch_at = [&](ThetaObject obj) {
    return attach(bundle_coefficient(theta_object(obj, twist, pc.ctx, order), exponent).ch(), pc.ctx);
  };
  GradedPolynomial integrand(pc.ctx.table, pc.ctx.max_weight);
  switch (s.kind) {
    case SettingKind::Spin4k:
      integrand = pc.spinor_m * ch_at(ThetaObject::Theta1) +
                  (ch_at(ThetaObject::Theta2) + ch_at(ThetaObject::Theta3)) * pow2(2 * s.k);
      integrand = pc.a_hat * integrand;
      break;
    case SettingKind::Spinc4k:
      integrand = pc.a_hat * pc.exp_half_c * ch_at(ThetaObject::ThetaL);
      break;
    case SettingKind::Spinc4k2:
      integrand = pc.a_hat * pc.exp_half_c * ch_at(ThetaObject::ThetaStarReduced);
      break;
  }
  if (which == PSeries::P1) integrand = integrand * pc.spinor_v;
  return pc.top(integrand);
}

GradedPolynomial theta_path(const Setting& s, const BundleContext& ctx, PSeries which, int exponent) {
  return attach(build_P(s, which)->coefficient(exponent), ctx);
}

void add_bundle_checks(VerificationReport& rep, const Setting& s, const Pieces& pc) {
  static const std::pair<int, const char*> exps[] = {{0, "q0"}, {kHalfStep, "q1/2"}, {kLatticePerQ, "q1"}};
  for (PSeries which : {PSeries::P1, PSeries::P2}) {
    const std::string p = which == PSeries::P1 ? "P1" : "P2";
    for (const auto& [e, label] : exps) {
      GradedPolynomial diff = theta_path(s, pc.ctx, which, e) - bundle_path(s, pc, which, e);
      rep.residuals.push_back(poly_residual("bundle_path_" + p + "_" + label, Role::Required, diff));
    }
  }
}

void add_realness(VerificationReport& rep, const Setting& s) {
  for (PSeries which : {PSeries::P1, PSeries::P2}) {
    PolySeries imag = build_P(s, which)->map([](const GradedPolynomial& c) {
      return c.attached() ? to_standard_basis(c).imag_part() : c;
    });
    rep.residuals.push_back(
        series_residual(std::string("imaginary_part_standard_") + (which == PSeries::P1 ? "P1" : "P2"),
                        Role::Required, imag));
  }
}

Status decide(const VerificationReport& rep) {
  if (!rep.integral) return Status::Fail;
  bool variant_used = false;
  for (const auto& r : rep.residuals) {
    if (r.role != Role::Required || r.zero) continue;
    const bool rescued = std::any_of(rep.residuals.begin(), rep.residuals.end(), [&](const Residual& v) {
      return v.role == Role::Variant && v.variant_of == r.name && v.zero;
    });
    if (!rescued) return Status::Fail;
    variant_used = true;
  }
  return variant_used ? Status::PassWithVariant : Status::Pass;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"3.1", "3.2", "3.3", "3.4", "4.1", "4.2", "4.6", "4.8"};
  return ids;
}

SettingKind theorem_setting(std::string_view id) {
  if (id == "3.1" || id == "3.2" || id == "3.3" || id == "3.4") return SettingKind::Spin4k;
  if (id == "4.1" || id == "4.2") return SettingKind::Spinc4k;
  if (id == "4.6" || id == "4.8") return SettingKind::Spinc4k2;
  throw std::invalid_argument("unknown theorem " + std::string(id));
}

GradedPolynomial cross_check_bundle_expansion(const Setting& s, PSeries which, int exponent) {
  if (exponent != 0 && exponent != kHalfStep && exponent != kLatticePerQ)
    throw std::invalid_argument("bundle cross-check supports q^0, q^(1/2) and q^1");
  const Pieces pc(s);
  return theta_path(s, pc.ctx, which, exponent) - bundle_path(s, pc, which, exponent);
}

VerificationReport verify_theorem(std::string_view id, int k, int l, int q_order) {
  const SettingKind kind = theorem_setting(id);
  if (id == "3.3") k = 2;
  if (id == "3.4") k = 3;
  const Setting s = make_setting(kind, k, l, q_order);
  const Pieces pc(s);
  const auto& ctx = pc.ctx;

  VerificationReport rep;
  rep.theorem = std::string(id);
  rep.setting = s;

  auto P1 = build_P(s, PSeries::P1);
  auto P2 = build_P(s, PSeries::P2);
  auto dec = decompose(*P2, s.k);
  for (auto& h : dec.h) h = attach(h, ctx);
  rep.h = dec.h;
  rep.solve_coeffs = dec.solve_coeffs;
  rep.integral = dec.integral;
  rep.residuals.push_back(series_residual("decomposition", Role::Required, dec.residual));
  rep.residuals.push_back(series_residual("transfer", Role::Required, transfer_check(*P1, dec.h, s.l, s.k)));

  const GradedPolynomial p1_q0 = theta_path(s, ctx, PSeries::P1, 0);
  const GradedPolynomial p1_q1 = theta_path(s, ctx, PSeries::P1, kLatticePerQ);
  const GradedPolynomial const_rhs = constant_side(dec.h, s, ctx);
  const GradedPolynomial q1_rhs = q1_side(dec.h, s, ctx);
  const GaussianRational shift(24 * s.k);
  const GradedPolynomial ch_v = pc.v_red.ch();
  const GradedPolynomial ch_t = pc.t_red.ch();

  auto structural = [&] {
    auto P3 = build_P(s, PSeries::P3);
    rep.residuals.push_back(series_residual("P3_minus_P2_sign_flip", Role::Required, *P3 - P2->sign_flip()));
    add_bundle_checks(rep, s, pc);
  };

  if (id == "3.1") {
    const GradedPolynomial lhs = pc.top((pc.a_hat * pc.spinor_m + pc.a_hat * pow2(2 * s.k + 1)) * pc.spinor_v);
    rep.residuals.push_back(poly_residual("identity", Role::Required, lhs - const_rhs));
    rep.residuals.push_back(poly_residual("P1_constant_term", Role::Required, p1_q0 - const_rhs));
    const GaussianRational sign0(s.k % 2 ? -1 : 1);
    const GradedPolynomial x = pc.spin_x();
    rep.residuals.push_back(poly_residual("h0", Role::Required, dec.h[0] - pc.top(x) * sign0));
    if (s.k >= 2) {
      const GradedPolynomial h1_expected = pc.top(x * (ch_v + pc.scalar(shift))) * (-sign0);
      rep.residuals.push_back(poly_residual("h1", Role::Required, dec.h[1] - h1_expected));
      const GradedPolynomial h1_flipped = pc.top(x * (ch_v - pc.scalar(shift))) * (-sign0);
      rep.residuals.push_back(poly_residual("h1_opposite_sign", Role::Variant, dec.h[1] - h1_flipped, "h1"));
    }
    if (s.k == 1) {
      rep.residuals.push_back(poly_residual("lhs_vanishes", Role::Required, lhs));
      rep.residuals.push_back(poly_residual("rhs_vanishes", Role::Required, const_rhs));
    }
    structural();
  } else if (id == "3.2") {
    const GradedPolynomial lam2 = vb_lambda2(pc.t_red).ch();
    const GradedPolynomial lhs =
        pc.top(pc.a_hat * pc.spinor_m * pc.spinor_v * (ch_t * GaussianRational(2) + ch_v - pc.scalar(shift)) +
               pc.a_hat * pc.spinor_v * (ch_t + lam2 + ch_v - pc.scalar(shift)) * pow2(2 * s.k + 1));
    rep.residuals.push_back(poly_residual("identity", Role::Required, lhs - q1_rhs));
    rep.residuals.push_back(poly_residual("P1_q1_minus_24k_q0", Role::Required, p1_q1 - p1_q0 * shift - q1_rhs));
  } else if (id == "3.3" || id == "3.4") {
    const GradedPolynomial x = pc.spin_x();
    const GradedPolynomial lhs = pc.top((pc.a_hat * pc.spinor_m + pc.a_hat * pow2(2 * s.k + 1)) * pc.spinor_v);
    const bool eight = s.k == 2;
    // coefficients a·{X} + b·{X ch(T_C M)}
    const GaussianRational a = eight ? GaussianRational(Rational(3) * Rational::pow2(s.l - 1))
                                     : GaussianRational(-Rational::pow2(s.l - 1));
    const GaussianRational b = eight ? GaussianRational(-Rational::pow2(s.l - 4)) : pow2(s.l - 3);
    const GradedPolynomial ch_tc = ch_t + pc.scalar(GaussianRational(4 * s.k));
    const GradedPolynomial stated = pc.top(x) * a + pc.top(x * ch_tc) * b;
    rep.residuals.push_back(poly_residual("identity", Role::Required, lhs - stated));
    const GradedPolynomial swapped = pc.top(x) * a + pc.top(x * (ch_v + pc.scalar(GaussianRational(4 * s.k)))) * b;
    rep.residuals.push_back(poly_residual("identity_with_V_in_place_of_TM", Role::Info, lhs - swapped));
    rep.residuals.push_back(poly_residual("identity_general_k", Role::Info, lhs - const_rhs));
    if (!rep.residuals[rep.residuals.size() - 3].zero && rep.residuals[rep.residuals.size() - 2].zero)
      rep.notes.push_back("stated identity fails; it holds with ch(T_C M) replaced by ch(V_C - 2l) + 4k");
  } else if (id == "4.1" || id == "4.6") {
    const GradedPolynomial lhs = pc.top(pc.a_hat * pc.exp_half_c * pc.spinor_v);
    rep.residuals.push_back(poly_residual("identity", Role::Required, lhs - const_rhs));
    rep.residuals.push_back(poly_residual("P1_constant_term", Role::Required, p1_q0 - const_rhs));
    structural();
    if (id == "4.6") add_realness(rep, s);
  } else if (id == "4.2") {
    const VirtualBundle l_red = pc.line - ctx.trivial(2);
    auto combo = [&](const VirtualBundle& L) {
      return (pc.t_red + L + vb_lambda2(L) + vb_lambda2(L) - L * L + pc.v_red).ch() - pc.scalar(shift);
    };
    const GradedPolynomial base = pc.a_hat * pc.exp_half_c * pc.spinor_v;
    rep.residuals.push_back(poly_residual("identity", Role::Required, pc.top(base * combo(l_red)) - q1_rhs));
    rep.residuals.push_back(
        poly_residual("identity_unreduced_line", Role::Variant, pc.top(base * combo(pc.line)) - q1_rhs, "identity"));
    rep.residuals.push_back(poly_residual("P1_q1_minus_24k_q0", Role::Required, p1_q1 - p1_q0 * shift - q1_rhs));
  } else if (id == "4.8") {
    const VirtualBundle l_red = pc.line - ctx.trivial(2);
    const GradedPolynomial base = pc.a_hat * pc.exp_half_c * pc.spinor_v;
    const GradedPolynomial lhs = pc.top(base * ((pc.t_red - l_red + pc.v_red).ch() - pc.scalar(shift)));
    rep.residuals.push_back(poly_residual("identity", Role::Required, lhs - q1_rhs));
    rep.residuals.push_back(poly_residual("P1_q1_minus_24k_q0", Role::Required, p1_q1 - p1_q0 * shift - q1_rhs));
    const GradedPolynomial lhs_unreduced =
        pc.top(base * ((pc.t_red - pc.line + pc.v_red).ch() - pc.scalar(shift)));
    rep.residuals.push_back(poly_residual("identity_unreduced_line", Role::Info, lhs_unreduced - q1_rhs));
    // Θ* built from the unreduced line bundle, compared with the theta path at q¹.
    auto unreduced = theta_object(ThetaObject::ThetaStar, VTwist::P1, ctx, kLatticePerQ);
    const GradedPolynomial bundle =
        pc.top(base * attach(bundle_coefficient(unreduced, kLatticePerQ).ch(), ctx));
    rep.residuals.push_back(poly_residual("bundle_path_unreduced_line_P1_q1", Role::Info, p1_q1 - bundle));
    add_realness(rep, s);
  }

  rep.status = decide(rep);
  return rep;
}

const std::vector<std::string>& corollary_ids() {
  static const std::vector<std::string> ids{"3.6", "3.8", "4.4", "4.5", "4.9", "4.10"};
  return ids;
}

DivisibilityAudit divisibility_check(std::string_view cor, int m, int l, int assumed_v2_h, bool check_integrality) {
  struct Claim {
    std::string_view id;
    SettingKind kind;
    bool q1;
    int exponent;
  };
  static const Claim claims[] = {
      {"3.6", SettingKind::Spin4k, false, 4},   {"3.8", SettingKind::Spin4k, true, 9},
      {"4.4", SettingKind::Spinc4k, false, 4},  {"4.5", SettingKind::Spinc4k, true, 9},
      {"4.9", SettingKind::Spinc4k2, false, 5}, {"4.10", SettingKind::Spinc4k2, true, 10},
  };
  const Claim* claim = nullptr;
  for (const auto& c : claims)
    if (c.id == cor) claim = &c;
  if (!claim) throw std::invalid_argument("unknown corollary " + std::string(cor));
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  if (l < 4 * m + 2) throw std::invalid_argument("l >= 4m+2 is required (m=" + std::to_string(m) + ")");
  if (assumed_v2_h < 0) throw std::invalid_argument("assumed v2(h) must be non-negative");

  DivisibilityAudit a;
  a.corollary = std::string(cor);
  a.m = m;
  a.k = 2 * m + 1;
  a.l = l;
  a.assumed_v2_h = assumed_v2_h;
  a.claimed_exponent = claim->exponent;
  for (int r = claim->q1 ? 1 : 0; r <= m; ++r) {
    const int e = claim->q1 ? l + a.k + 6 - 6 * r + v2(mpz_class(r)) : l + a.k - 6 * r;
    a.terms.push_back({r, e + assumed_v2_h});
  }
  for (const auto& t : a.terms)
    a.implied_exponent = a.implied_exponent ? std::min(*a.implied_exponent, t.exponent) : t.exponent;
  a.gap = a.implied_exponent && *a.implied_exponent < a.claimed_exponent;
  if (check_integrality) {
    const Setting s = make_setting(claim->kind, a.k, l);
    a.integral = decompose(*build_P(s, PSeries::P2), a.k).integral;
  }
  return a;
}

}  // namespace anomaly
