#include <doctest.h>

#include "anomaly/puiseux_series.hpp"
#include "support.hpp"

using namespace anomaly;

TEST_SUITE("qseries") {

TEST_CASE("coefficient access respects the truncation bound") {
  QSeries s(16);
  s.add_to(8, 3);
  CHECK(s.coefficient(8) == GaussianRational(3));
  CHECK(s.coefficient(12) == GaussianRational(0));
  CHECK_THROWS_AS(s.coefficient(17), TruncationError);
  CHECK(s.valuation() == 8);
}

TEST_CASE("geometric series from a binomial") {
  QSeries one_minus_q = binomial_factor(kLatticePerQ, -1).truncated(40);
  const QSeries inv = one_minus_q.inverse();
  for (int k = 0; k <= 40; k += kLatticePerQ) CHECK(inv.coefficient(k) == GaussianRational(1));
  CHECK(inv.coefficient(4) == GaussianRational(0));
}

TEST_CASE("product bound tracks valuations") {
  QSeries a(16), b(16);
  a.add_to(1, 1);
  b.add_to(4, 1);
  const QSeries p = a * b;
  CHECK(p.order_bound() == 17);
  CHECK(p.coefficient(5) == GaussianRational(1));
}

TEST_CASE("inverse of a shifted series") {
  QSeries s(24);
  s.add_to(1, 2);
  s.add_to(9, 1);
  const QSeries inv = s.inverse();
  CHECK(inv.valuation() == -1);
  CHECK((s * inv).truncated(20) == QSeries::monomial(0, 1, 20));
}

TEST_CASE("sign flip needs the half lattice") {
  QSeries s(16);
  s.add_to(1, 1);
  CHECK_THROWS(s.sign_flip());
}

TEST_CASE("text form uses rational exponents") {
  QSeries s(16);
  s.add_to(0, GaussianRational(Rational(1, 4)));
  s.add_to(4, -3);
  s.add_to(8, 6);
  const std::string text = series_str(s);
  CHECK(text.find("q^(1/2)") != std::string::npos);
  CHECK(text.find("1/4") == 0);
}

TEST_CASE("property: series inverse") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries s = testing::random_qseries(rng, 48, kHalfStep, true);
    const QSeries inv = s.inverse();
    CHECK((s * inv) == QSeries::monomial(0, 1, 48));
    CHECK(inv.inverse() == s);
  }
}

TEST_CASE("property: sign flip is a ring involution") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries a = testing::random_qseries(rng, 40, kHalfStep, false);
    const QSeries b = testing::random_qseries(rng, 40, kHalfStep, false);
    CHECK(a.sign_flip().sign_flip() == a);
    CHECK((a * b).sign_flip() == a.sign_flip() * b.sign_flip());
  }
}

TEST_CASE("property: pow agrees with repeated products") {
  std::mt19937 rng(8);
  const QSeries a = testing::random_qseries(rng, 32, kHalfStep, true);
  QSeries acc = QSeries::monomial(0, 1, 32);
  for (int m = 1; m <= 5; ++m) {
    acc = acc * a;
    CHECK(a.pow(m) == acc);
  }
  CHECK(a.pow(-2) * a.pow(2) == QSeries::monomial(0, 1, 32));
}

}
