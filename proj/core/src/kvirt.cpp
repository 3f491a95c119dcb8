#include "anomaly/kvirt.hpp"

namespace anomaly {

namespace {

long integral_rank(const GradedPolynomial& ch) {
  if (!ch.attached()) return 0;
  const GaussianRational c = ch.constant_term();
  if (!c.is_real() || !c.re().is_integer()) throw std::domain_error("virtual bundle rank is not an integer: " + c.str());
  return c.re().numerator().get_si();
}

/// 2cos 2x = Σ_m 2(−4)^m x^{2m}/(2m)!, as coefficients in x².
std::vector<GaussianRational> two_cos_two(int terms) {
  std::vector<GaussianRational> g;
  Rational fact(1);
  for (int m = 0; m < terms; ++m) {
    if (m > 0) fact *= Rational(2 * m - 1) * Rational(2 * m);
    g.push_back(GaussianRational(Rational(2) * Rational(-4).pow(m) / fact));
  }
  return g;
}

}  // namespace

VirtualBundle::VirtualBundle(GradedPolynomial ch) : rank_(integral_rank(ch)), ch_(std::move(ch)) {}

VirtualBundle VirtualBundle::trivial(const TablePtr& table, int max_weight, long rank) {
  return VirtualBundle(GradedPolynomial::constant(table, max_weight, GaussianRational(rank)));
}

VirtualBundle VirtualBundle::adams(int m) const {
  if (m < 1) throw std::invalid_argument("Adams operation needs m >= 1");
  VirtualBundle out = *this;
  if (ch_.attached()) out.ch_ = ch_.scale_weights(Rational(m));
  return out;
}

VirtualBundle VirtualBundle::scaled(const Rational& c) const { return VirtualBundle(ch_ * GaussianRational(c)); }

VirtualBundle& VirtualBundle::operator+=(const VirtualBundle& o) {
  ch_ += o.ch_;
  rank_ += o.rank_;
  return *this;
}

VirtualBundle& VirtualBundle::operator-=(const VirtualBundle& o) {
  ch_ -= o.ch_;
  rank_ -= o.rank_;
  return *this;
}

VirtualBundle operator-(const VirtualBundle& a) {
  VirtualBundle out = a;
  out.ch_ = -a.ch_;
  out.rank_ = -a.rank_;
  return out;
}

VirtualBundle operator*(const VirtualBundle& a, const VirtualBundle& b) {
  VirtualBundle out;
  if (!a.ch_.attached() || !b.ch_.attached()) return out;
  out.ch_ = a.ch_ * b.ch_;
  out.rank_ = a.rank_ * b.rank_;
  return out;
}

VirtualBundle operator*(const VirtualBundle& a, const GaussianRational& c) {
  return VirtualBundle(a.ch_ * c);
}

VirtualBundle one_like(const VirtualBundle& sample) { return VirtualBundle(one_like(sample.ch())); }

VirtualBundle ring_inverse(const VirtualBundle& v) {
  if (v.rank() != 1 && v.rank() != -1) throw std::domain_error("only rank ±1 virtual bundles are invertible");
  return VirtualBundle(v.ch().inverse());
}

BundleSeries vb_lambda_t(const VirtualBundle& e, int exponent, int sign, int order) {
  if (exponent <= 0) throw std::invalid_argument("Λ_t needs a positive exponent");
  if (!e.ch().attached()) throw std::invalid_argument("Λ_t of a detached bundle");
  const int n_max = order / exponent;
  std::vector<VirtualBundle> psi(n_max + 1), b(n_max + 1);
  for (int m = 1; m <= n_max; ++m) psi[m] = e.adams(m);
  b[0] = one_like(e);
  BundleSeries out(order);
  out.add_to(0, b[0]);
  for (int n = 1; n <= n_max; ++n) {
    VirtualBundle acc = psi[1] * b[n - 1];
    for (int m = 2; m <= n; ++m) {
      if (m % 2 == 0)
        acc -= psi[m] * b[n - m];
      else
        acc += psi[m] * b[n - m];
    }
    b[n] = acc.scaled(Rational(1, n));
    out.add_to(n * exponent, (sign < 0 && n % 2) ? -b[n] : b[n]);
  }
  return out;
}

BundleSeries vb_s_t(const VirtualBundle& e, int exponent, int order) {
  if (exponent <= 0) throw std::invalid_argument("S_t needs a positive exponent");
  if (!e.ch().attached()) throw std::invalid_argument("S_t of a detached bundle");
  const int n_max = order / exponent;
  std::vector<VirtualBundle> psi(n_max + 1), s(n_max + 1);
  for (int m = 1; m <= n_max; ++m) psi[m] = e.adams(m);
  s[0] = one_like(e);
  BundleSeries out(order);
  out.add_to(0, s[0]);
  for (int n = 1; n <= n_max; ++n) {
    VirtualBundle acc = psi[1] * s[n - 1];
    for (int m = 2; m <= n; ++m) acc += psi[m] * s[n - m];
    s[n] = acc.scaled(Rational(1, n));
    out.add_to(n * exponent, s[n]);
  }
  return out;
}

VirtualBundle vb_lambda2(const VirtualBundle& e) { return (e * e - e.adams(2)).scaled(Rational(1, 2)); }

VirtualBundle BundleContext::trivial(long rank) const { return VirtualBundle::trivial(table, max_weight, rank); }

VirtualBundle BundleContext::tangent() const {
  return VirtualBundle(
      additive_over_roots(two_cos_two(max_weight / 2 + 1), {Family::TM, tm_roots()}, table, max_weight));
}

VirtualBundle BundleContext::v_bundle() const {
  return VirtualBundle(additive_over_roots(two_cos_two(max_weight / 2 + 1), {Family::V, l}, table, max_weight));
}

VirtualBundle BundleContext::line() const {
  const auto u = table->find(Family::U, 1);
  if (!u) throw std::invalid_argument("setting has no line bundle");
  const GradedPolynomial ug = GradedPolynomial::generator(table, max_weight, *u);
  const GradedPolynomial u2 = ug * ug;
  GradedPolynomial ch(table, max_weight);
  GradedPolynomial power = GradedPolynomial::constant(table, max_weight, GaussianRational(1));
  for (const auto& c : two_cos_two(max_weight / 2 + 1)) {
    ch += power * c;
    power = power * u2;
  }
  return VirtualBundle(ch);
}

GradedPolynomial BundleContext::a_hat() const {
  return classical_genus(GenusKind::AHat, {Family::TM, tm_roots()}, table, max_weight);
}

GradedPolynomial BundleContext::spinor_m() const {
  return classical_genus(GenusKind::SpinorCh, {Family::TM, tm_roots()}, table, max_weight);
}

GradedPolynomial BundleContext::spinor_v() const {
  return classical_genus(GenusKind::SpinorCh, {Family::V, l}, table, max_weight);
}

GradedPolynomial BundleContext::exp_half_c() const {
  return classical_genus(GenusKind::ExpHalfC, {Family::U, 1}, table, max_weight);
}

BundleContext make_context(SettingKind kind, int k, int l) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (l < 1) throw std::invalid_argument("l must be at least 1");
  BundleContext ctx;
  ctx.kind = kind;
  ctx.k = k;
  ctx.l = l;
  ctx.max_weight = kind == SettingKind::Spinc4k2 ? 2 * k + 1 : 2 * k;
  const int half = ctx.max_weight / 2;
  ctx.table = make_table(std::min(ctx.tm_roots(), half), std::min(l, half), kind != SettingKind::Spin4k);
  return ctx;
}

std::string to_string(ThetaObject t) {
  switch (t) {
    case ThetaObject::Theta1: return "Theta1";
    case ThetaObject::Theta2: return "Theta2";
    case ThetaObject::Theta3: return "Theta3";
    case ThetaObject::ThetaL: return "Theta";
    case ThetaObject::ThetaStar: return "ThetaStar";
    case ThetaObject::ThetaStarReduced: return "ThetaStarReduced";
  }
  return "?";
}

namespace {

/// ⊗_j Λ_{sign·q^{(8j − shift)/8}}(E) for j >= 1.
BundleSeries lambda_string(const VirtualBundle& e, int shift, int sign, int order) {
  BundleSeries acc = BundleSeries::monomial(0, one_like(e), order);
  for (int j = 1; kLatticePerQ * j - shift <= order; ++j)
    acc = (acc * vb_lambda_t(e, kLatticePerQ * j - shift, sign, order)).truncated(order);
  return acc;
}

BundleSeries s_string(const VirtualBundle& e, int order) {
  BundleSeries acc = BundleSeries::monomial(0, one_like(e), order);
  for (int j = 1; kLatticePerQ * j <= order; ++j)
    acc = (acc * vb_s_t(e, kLatticePerQ * j, order)).truncated(order);
  return acc;
}

}  // namespace

BundleSeries theta_object(ThetaObject which, VTwist twist, const BundleContext& ctx, int order) {
  const VirtualBundle t = ctx.tangent();
  const VirtualBundle t_red = t - ctx.trivial(t.rank());
  BundleSeries out = s_string(t_red, order);
  auto mul = [&](const BundleSeries& s) { out = (out * s).truncated(order); };
  switch (which) {
    case ThetaObject::Theta1: mul(lambda_string(t_red, 0, +1, order)); break;
    case ThetaObject::Theta2: mul(lambda_string(t_red, kHalfStep, -1, order)); break;
    case ThetaObject::Theta3: mul(lambda_string(t_red, kHalfStep, +1, order)); break;
    case ThetaObject::ThetaL: {
      const VirtualBundle line = ctx.line();
      mul(lambda_string(line, 0, +1, order));
      mul(lambda_string(line, kHalfStep, -1, order));
      mul(lambda_string(line, kHalfStep, +1, order));
      break;
    }
    case ThetaObject::ThetaStar: mul(lambda_string(ctx.line(), 0, -1, order)); break;
    case ThetaObject::ThetaStarReduced: mul(lambda_string(ctx.line() - ctx.trivial(2), 0, -1, order)); break;
  }
  if (twist != VTwist::None) {
    const VirtualBundle v = ctx.v_bundle();
    const VirtualBundle v_red = v - ctx.trivial(v.rank());
    switch (twist) {
      case VTwist::P1: mul(lambda_string(v_red, 0, +1, order)); break;
      case VTwist::P2: mul(lambda_string(v_red, kHalfStep, -1, order)); break;
      case VTwist::P3: mul(lambda_string(v_red, kHalfStep, +1, order)); break;
      case VTwist::None: break;
    }
  }
  return out;
}

VirtualBundle bundle_coefficient(const BundleSeries& s, int exponent) { return s.coefficient(exponent); }

}  // namespace anomaly
