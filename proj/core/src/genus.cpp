#include "anomaly/genus.hpp"

#include "anomaly/newton.hpp"

namespace anomaly {

std::string to_string(SettingKind kind) {
  switch (kind) {
    case SettingKind::Spin4k: return "spin4k";
    case SettingKind::Spinc4k: return "spinc4k";
    case SettingKind::Spinc4k2: return "spinc4k2";
  }
  return "?";
}

SettingKind parse_setting_kind(std::string_view name) {
  for (auto k : {SettingKind::Spin4k, SettingKind::Spinc4k, SettingKind::Spinc4k2})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown setting " + std::string(name));
}

std::vector<GradedPolynomial> power_sums(const TablePtr& table, int max_weight, const RootFamily& fam, int count) {
  if (count <= 0) return {};
  std::vector<GradedPolynomial> e;
  for (int i = 1; i <= count; ++i) {
    auto idx = table->find(fam.family, i);
    if (idx && i <= fam.n_roots)
      e.push_back(GradedPolynomial::generator(table, max_weight, *idx));
    else
      e.emplace_back(table, max_weight);
  }
  auto s = newton_convert<GradedPolynomial>(e, fam.n_roots, NewtonDirection::ElementaryToPowerSum);
  for (auto& p : s)
    if (!p.attached()) p = GradedPolynomial(table, max_weight);
  return s;
}

PolySeries prod_over_roots(const RootFactor& f, const RootFamily& fam, const TablePtr& table, int max_weight) {
  if (f.parity() == Parity::Odd || f.parity() == Parity::Mixed)
    throw std::domain_error("prod_over_roots needs an even factor");
  const int q_bound = f.q_bound();
  const GradedPolynomial one = GradedPolynomial::constant(table, max_weight, GaussianRational(1));
  if (fam.n_roots == 0) return PolySeries::monomial(0, one, q_bound);

  const RootFactor lg = f.log();
  const int m_max = std::min(max_weight, f.z_bound()) / 2;
  const auto s = power_sums(table, max_weight, fam, m_max);

  PolySeries g(q_bound);
  for (int m = 1; m <= m_max; ++m)
    for (const auto& [k, c] : lg.slice(2 * m).terms()) g.add_to(k, s[m - 1] * c);

  // exp: every term of g has weight >= 2
  PolySeries out = PolySeries::monomial(0, one, q_bound);
  PolySeries power = out;
  for (int n = 1; 2 * n <= max_weight; ++n) {
    power = power * g;
    if (power.is_zero()) break;
    PolySeries term = power;
    Rational fact(1);
    for (int i = 2; i <= n; ++i) fact *= Rational(i);
    term.scale(GaussianRational(Rational(1) / fact));
    out += term;
  }
  return out.truncated(q_bound);
}

GradedPolynomial additive_over_roots(const std::vector<GaussianRational>& g, const RootFamily& fam,
                                     const TablePtr& table, int max_weight) {
  GradedPolynomial out(table, max_weight);
  if (g.empty()) return out;
  out += GradedPolynomial::constant(table, max_weight, g[0] * GaussianRational(fam.n_roots));
  const int m_max = std::min<int>(static_cast<int>(g.size()) - 1, max_weight / 2);
  const auto s = power_sums(table, max_weight, fam, m_max);
  for (int m = 1; m <= m_max; ++m) out += s[m - 1] * g[m];
  return out;
}

PolySeries eval_at_var(const RootFactor& f, const TablePtr& table, int max_weight) {
  const auto u = table->find(Family::U, 1);
  if (!u) throw std::invalid_argument("generator table has no u");
  PolySeries out(f.q_bound());
  GradedPolynomial power = GradedPolynomial::constant(table, max_weight, GaussianRational(1));
  const GradedPolynomial gen = GradedPolynomial::generator(table, max_weight, *u);
  for (int d = 0; d <= std::min(max_weight, f.z_bound()); ++d) {
    for (const auto& [k, c] : f.slice(d).terms()) out.add_to(k, power * c);
    power = power * gen;
  }
  return out;
}

GradedPolynomial classical_genus(GenusKind kind, const RootFamily& fam, const TablePtr& table, int max_weight) {
  const int zb = max_weight + 1;
  auto lift = [&](const std::vector<GaussianRational>& c) { return RootFactor::from_z_series(c, zb, 0); };
  auto sinc = [&] {
    auto s = taylor_sin(zb + 1);
    return lift(std::vector<GaussianRational>(s.begin() + 1, s.end()));
  };
  auto product = [&](const RootFactor& f, const Rational& per_root) {
    GradedPolynomial p = prod_over_roots(f, fam, table, max_weight).coefficient(0);
    if (!p.attached()) p = GradedPolynomial(table, max_weight);
    return p * GaussianRational(per_root.pow(fam.n_roots));
  };
  switch (kind) {
    case GenusKind::AHat:
      return product(sinc().inverse(), Rational(1));
    case GenusKind::LHat:
      return product(lift(taylor_cos(zb)) * sinc().inverse(), Rational(2));
    case GenusKind::SpinorCh:
      return product(lift(taylor_cos(zb)), Rational(2));
    case GenusKind::ExpHalfC: {
      PolySeries s = eval_at_var(lift(taylor_exp(zb, GaussianRational::i())), table, max_weight);
      return s.coefficient(0);
    }
  }
  throw std::logic_error("unreachable");
}

GradedPolynomial apply_constraint(const GradedPolynomial& p, SettingKind kind) {
  if (!p.attached()) return p;
  const auto& table = p.table();
  const int W = p.max_weight();
  const auto v1 = table->find(Family::V, 1);
  if (kind == SettingKind::Spin4k) {
    if (!v1) return p;
    return p.substitute(*v1, GradedPolynomial(table, W));
  }
  const auto m1 = table->find(Family::TM, 1);
  if (!m1) return p;
  const auto u = table->find(Family::U, 1);
  if (!u) throw std::invalid_argument("spin^c constraint needs the u generator");
  const GradedPolynomial ug = GradedPolynomial::generator(table, W, *u);
  GradedPolynomial repl = ug * ug * GaussianRational(kind == SettingKind::Spinc4k ? 3 : 1);
  if (v1) repl += GradedPolynomial::generator(table, W, *v1);
  return p.substitute(*m1, repl);
}

PolySeries apply_constraint(const PolySeries& p, SettingKind kind) {
  return p.map([&](const GradedPolynomial& c) { return apply_constraint(c, kind); });
}

PolySeries series_component(const PolySeries& p, int w) {
  return p.map([&](const GradedPolynomial& c) { return c.component(w); });
}

std::string poly_series_str(const PolySeries& s) {
  return s.str([](const GradedPolynomial& c) { return c.str(); });
}

}  // namespace anomaly
