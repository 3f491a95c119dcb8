// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance          all criteria
//   acceptance N ...    only the listed criteria

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "anomaly/genus.hpp"
#include "anomaly/modforms.hpp"
#include "anomaly/theta.hpp"
#include "anomaly/verify.hpp"
#include "cli.hpp"
#include "oracles/explicit_roots.hpp"

using namespace anomaly;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back(what);
    }
  }
};

std::string case_name(const std::string& id, int k, int l) {
  return id + " k=" + std::to_string(k) + " l=" + std::to_string(l);
}

struct GridSetting {
  SettingKind kind;
  int k, l;
};

std::vector<GridSetting> grid_settings() {
  std::vector<GridSetting> out;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 4; ++l) out.push_back({SettingKind::Spin4k, k, l});
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 3; ++l) out.push_back({SettingKind::Spinc4k, k, l});
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) out.push_back({SettingKind::Spinc4k2, k, l});
  return out;
}

void require_residual(Outcome& o, const VerificationReport& r, const std::string& name) {
  const Residual* x = r.find(name);
  const std::string where = case_name(r.theorem, r.setting.k, r.setting.l) + " " + name;
  if (!x) {
    o.require(false, where + " missing");
    return;
  }
  o.require(x->zero, where + " = " + x->value);
}

Outcome theta_layer() {
  Outcome o;
  const auto t0 = Clock::now();
  o.require(jacobi_check(80).is_zero(), "jacobi residual nonzero through q^10");
  const QSeries d1 = delta_eps(DeltaEps::Delta1, 80), e1 = delta_eps(DeltaEps::Eps1, 80);
  const QSeries d2 = delta_eps(DeltaEps::Delta2, 80), e2 = delta_eps(DeltaEps::Eps2, 80);
  o.require(d1.coefficient(0) == GaussianRational(Rational(1, 4)) && d1.coefficient(4).is_zero() &&
                d1.coefficient(8) == GaussianRational(6),
            "delta1 leading terms");
  o.require(e1.coefficient(0) == GaussianRational(Rational(1, 16)) && e1.coefficient(8) == GaussianRational(-1),
            "eps1 leading terms");
  o.require(d2.coefficient(0) == GaussianRational(Rational(-1, 8)) && d2.coefficient(4) == GaussianRational(-3),
            "delta2 leading terms");
  o.require(e2.coefficient(0).is_zero() && e2.coefficient(4) == GaussianRational(1), "eps2 leading terms");
  auto integral = [](const QSeries& s, const Rational& scale, const Rational& shift) {
    for (int k = 0; k <= 80; ++k) {
      GaussianRational c = s.coefficient(k) * GaussianRational(scale);
      if (k == 0) c -= GaussianRational(shift);
      if (!c.is_real() || !c.re().is_integer()) return false;
    }
    return true;
  };
  o.require(integral(d2, 8, 0), "8*delta2 not integral");
  o.require(integral(e2, 1, 0), "eps2 not integral");
  o.require(integral(e1, 16, 0), "16*eps1 not integral");
  o.require(integral(d1, 1, Rational(1, 4)), "delta1 - 1/4 not integral");
  const double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  return o;
}

Outcome spin_theorems() {
  Outcome o;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 4; ++l) {
      const auto t0 = Clock::now();
      const auto r1 = verify_theorem("3.1", k, l);
      const auto r2 = verify_theorem("3.2", k, l);
      const double t = seconds_since(t0);
      for (const char* name : {"decomposition", "transfer", "identity", "h0"}) require_residual(o, r1, name);
      if (k >= 2) {
        const Residual* h1 = r1.find("h1");
        const Residual* flipped = r1.find("h1_opposite_sign");
        o.require(h1 && (h1->zero || (flipped && flipped->zero)), case_name("3.1", k, l) + " h1 matches neither sign");
      }
      require_residual(o, r2, "identity");
      o.require(r1.integral && r2.integral, case_name("3.1", k, l) + " solve coefficients not integral");
      o.require(t < 30.0, case_name("3.1/3.2", k, l) + " runtime " + std::to_string(t) + " s");
    }
  return o;
}

Outcome low_dimensional_corollaries() {
  Outcome o;
  for (const char* id : {"3.3", "3.4"})
    for (int l = 1; l <= 4; ++l) require_residual(o, verify_theorem(id, 0, l), "identity");
  return o;
}

std::vector<GaussianRational> a_hat_taylor(int z_bound) {
  const RootFactor a = build_theta_factor(FactorKind::A, 0, z_bound);
  return a.q0_slice();
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& g : grid_settings()) {
    const Setting s = make_setting(g.kind, g.k, g.l);
    for (auto which : {PSeries::P1, PSeries::P2})
      for (int e : {0, kHalfStep, kLatticePerQ}) {
        const auto diff = cross_check_bundle_expansion(s, which, e);
        o.require(diff.is_zero(), to_string(g.kind) + " k=" + std::to_string(g.k) + " l=" + std::to_string(g.l) +
                                      (which == PSeries::P1 ? " P1" : " P2") + " q^" + std::to_string(e) +
                                      "/8: " + diff.str());
      }
  }
  const auto taylor = a_hat_taylor(6);
  for (int n = 1; n <= 3; ++n)
    for (int W = 2; W <= 6; W += 2) {
      const auto table = make_table(std::min(n, W / 2), 0, false);
      const GradedPolynomial engine = classical_genus(GenusKind::AHat, {Family::TM, n}, table, W);
      oracle::XPoly mine(n, W / 2);
      for (const auto& [m, c] : engine.terms()) {
        oracle::XPoly term = oracle::XPoly::constant(n, W / 2, c.re().value());
        for (std::size_t gi = 0; gi < table->size(); ++gi)
          for (int e = 0; e < m[gi]; ++e) term = term * oracle::XPoly::elementary(n, W / 2, (*table)[gi].index);
        mine += term;
      }
      const auto brute = oracle::product_over_roots(
          [&](int m, int k) { return k == 0 && 2 * m <= W ? taylor[2 * m].re().value() : mpq_class(0); }, n, W / 2, 0);
      o.require(mine == brute.at(0), "A-hat brute force n=" + std::to_string(n) + " W=" + std::to_string(W));
      for (auto kind : {FactorKind::A, FactorKind::T1, FactorKind::T2, FactorKind::T3}) {
        const RootFactor f = build_theta_factor(kind, 16, W);
        const PolySeries ps = prod_over_roots(f, {Family::TM, n}, table, W);
        const auto ref = oracle::product_over_roots(
            [&](int m, int k) { return f.coefficient(2 * m, k).re().value(); }, n, W / 2, 16);
        oracle::XSeries got;
        for (const auto& [k, p] : ps.terms()) {
          oracle::XPoly x(n, W / 2);
          for (const auto& [m, c] : p.terms()) {
            oracle::XPoly term = oracle::XPoly::constant(n, W / 2, c.re().value());
            for (std::size_t gi = 0; gi < table->size(); ++gi)
              for (int e = 0; e < m[gi]; ++e) term = term * oracle::XPoly::elementary(n, W / 2, (*table)[gi].index);
            x += term;
          }
          if (!x.terms().empty()) got.emplace(k, x);
        }
        o.require(got == ref, to_string(kind) + " brute force n=" + std::to_string(n) + " W=" + std::to_string(W));
      }
    }
  return o;
}

Outcome spinc_theorems() {
  Outcome o;
  auto run = [&](const char* id, int k, int l) {
    const auto t0 = Clock::now();
    const auto r = verify_theorem(id, k, l);
    const double t = seconds_since(t0);
    o.require(r.status == Status::Pass || r.status == Status::PassWithVariant,
              case_name(id, k, l) + " status " + to_string(r.status));
    o.require(r.integral, case_name(id, k, l) + " solve coefficients not integral");
    o.require(t < 60.0, case_name(id, k, l) + " runtime " + std::to_string(t) + " s");
    if (r.setting.kind == SettingKind::Spinc4k2) {
      for (const auto& h : r.h) o.require(to_standard_basis(h).is_real(), case_name(id, k, l) + " h not real");
      for (auto which : {PSeries::P1, PSeries::P2}) {
        const auto P = build_P(r.setting, which);
        for (const auto& [e, c] : P->terms())
          o.require(to_standard_basis(c).is_real(), case_name(id, k, l) + " P not real at q^" + std::to_string(e) + "/8");
      }
    }
  };
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 3; ++l) {
      run("4.1", k, l);
      run("4.2", k, l);
    }
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) {
      run("4.6", k, l);
      run("4.8", k, l);
    }
  return o;
}

Outcome structural() {
  Outcome o;
  for (int l = 1; l <= 4; ++l) {
    const auto r = verify_theorem("3.1", 1, l);
    require_residual(o, r, "lhs_vanishes");
    require_residual(o, r, "rhs_vanishes");
  }
  for (const auto& g : grid_settings()) {
    const Setting s = make_setting(g.kind, g.k, g.l);
    const auto P2 = build_P(s, PSeries::P2);
    const auto P3 = build_P(s, PSeries::P3);
    o.require(P3->terms() == P2->sign_flip().terms(),
              to_string(g.kind) + " k=" + std::to_string(g.k) + " l=" + std::to_string(g.l) + " P3 != P2(-t)");
  }
  return o;
}

Outcome divisibility() {
  Outcome o;
  auto check = [&](const char* cor, int m, bool expect_gap, int expect_implied = -1) {
    const auto a = divisibility_check(cor, m, 4 * m + 2);
    std::string where = std::string("Cor ") + cor + " m=" + std::to_string(m);
    o.require(a.gap == expect_gap, where + (a.gap ? " GAP" : " no gap"));
    if (a.integral) o.require(*a.integral, where + " h_r not integral");
    if (expect_implied >= 0)
      o.require(a.implied_exponent == expect_implied, where + " implied exponent " +
                                                          (a.implied_exponent ? std::to_string(*a.implied_exponent) : "none"));
  };
  for (int m = 0; m <= 1; ++m) {
    check("3.6", m, false);
    check("3.8", m, false);
    check("4.10", m, false);
  }
  const auto a49 = divisibility_check("4.9", 1, 6);
  o.require(a49.gap && a49.implied_exponent == 4 && a49.claimed_exponent == 5, "Cor 4.9 audit is not 16 vs 32 GAP");
  return o;
}

Outcome full_suite() {
  Outcome o;
  auto run_suite = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    anomaly::cli::run(args, out, err);
    return out.str();
  };
  const auto t0 = Clock::now();
  const std::string first = run_suite({"suite"});
  const double t = seconds_since(t0);
  o.require(t < 300.0, "suite runtime " + std::to_string(t) + " s");
  o.require(first == run_suite({"suite"}), "two serial runs differ");
  o.require(first == run_suite({"suite", "--parallel", "4"}), "parallel run differs from serial");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "theta/modform layer", theta_layer},
      {2, "spin theorems 3.1 and 3.2 on k<=3, l<=4", spin_theorems},
      {3, "corollaries 3.3 and 3.4", low_dimensional_corollaries},
      {4, "theta path vs bundle path, genus vs explicit roots", oracle_equivalence},
      {5, "spin^c theorems 4.1, 4.2, 4.6, 4.8", spinc_theorems},
      {6, "degenerate k=1 case and P3(t) = P2(-t)", structural},
      {7, "divisibility audits", divisibility},
      {8, "full suite runtime and determinism", full_suite},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));

  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
