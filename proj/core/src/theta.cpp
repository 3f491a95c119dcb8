#include "anomaly/theta.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace anomaly {

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
  }
  return "?";
}

RootFactor::RootFactor(int z_bound, int q_bound) : z_bound_(z_bound), q_bound_(q_bound) {
  if (z_bound < 0) throw std::invalid_argument("negative z bound");
  slices_.assign(static_cast<std::size_t>(z_bound) + 1, QSeries(q_bound));
}

RootFactor RootFactor::from_z_series(std::span<const GaussianRational> coeffs, int z_bound, int q_bound) {
  RootFactor f(z_bound, q_bound);
  for (std::size_t d = 0; d < coeffs.size() && static_cast<int>(d) <= z_bound; ++d)
    f.slices_[d].add_to(0, coeffs[d]);
  return f;
}

void RootFactor::set_slice(int d, QSeries s) {
  if (d < 0 || d > z_bound_) throw std::out_of_range("z degree out of range");
  slices_[static_cast<std::size_t>(d)] = s.truncated(q_bound_);
}

std::vector<GaussianRational> RootFactor::q0_slice() const {
  std::vector<GaussianRational> out;
  for (const auto& s : slices_) out.push_back(s.coefficient(0));
  return out;
}

Parity RootFactor::parity() const {
  bool even = false, odd = false;
  for (std::size_t d = 0; d < slices_.size(); ++d) {
    if (slices_[d].is_zero()) continue;
    (d % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

bool RootFactor::is_real() const {
  for (const auto& s : slices_)
    for (const auto& t : s.terms())
      if (!t.second.is_real()) return false;
  return true;
}

RootFactor RootFactor::operator*(const RootFactor& o) const {
  RootFactor out(std::min(z_bound_, o.z_bound_), std::min(q_bound_, o.q_bound_));
  for (int i = 0; i <= out.z_bound_; ++i) {
    if (slices_[i].is_zero()) continue;
    for (int j = 0; i + j <= out.z_bound_; ++j) {
      if (o.slices_[j].is_zero()) continue;
      out.slices_[i + j] += (slices_[i] * o.slices_[j]).truncated(out.q_bound_);
    }
  }
  return out;
}

RootFactor& RootFactor::operator*=(const QSeries& s) {
  for (auto& slice : slices_) slice = (slice * s).truncated(q_bound_);
  return *this;
}

RootFactor& RootFactor::operator*=(const GaussianRational& c) {
  for (auto& slice : slices_) slice.scale(c);
  return *this;
}

RootFactor RootFactor::inverse() const {
  RootFactor out(z_bound_, q_bound_);
  const QSeries g0 = slices_[0].truncated(q_bound_).inverse().truncated(q_bound_);
  out.slices_[0] = g0;
  for (int d = 1; d <= z_bound_; ++d) {
    QSeries acc(q_bound_);
    for (int i = 1; i <= d; ++i) {
      if (slices_[i].is_zero() || out.slices_[d - i].is_zero()) continue;
      acc += slices_[i] * out.slices_[d - i];
    }
    out.slices_[d] = (-(acc * g0)).truncated(q_bound_);
  }
  return out;
}

RootFactor RootFactor::log() const {
  if (!(slices_[0] == QSeries::monomial(0, GaussianRational(1))))
    throw std::domain_error("log needs a z^0 slice equal to 1");
  RootFactor out(z_bound_, q_bound_);
  for (int d = 1; d <= z_bound_; ++d) {
    QSeries acc(q_bound_);
    for (int i = 1; i < d; ++i) {
      if (out.slices_[i].is_zero() || slices_[d - i].is_zero()) continue;
      acc += (out.slices_[i] * slices_[d - i]).scale(GaussianRational(i));
    }
    acc.scale(GaussianRational(Rational(-1, d)));
    out.slices_[d] = (slices_[d] + acc).truncated(q_bound_);
  }
  return out;
}

RootFactor RootFactor::sign_flip() const {
  RootFactor out = *this;
  for (auto& s : out.slices_) s = s.sign_flip();
  return out;
}

RootFactor RootFactor::real_part() const {
  RootFactor out(z_bound_, q_bound_);
  for (std::size_t d = 0; d < slices_.size(); ++d)
    out.slices_[d] = slices_[d].map([](const GaussianRational& c) { return GaussianRational(c.re()); });
  return out;
}

std::string to_string(NullKind k) {
  switch (k) {
    case NullKind::Theta1: return "theta1";
    case NullKind::Theta2: return "theta2";
    case NullKind::Theta3: return "theta3";
    case NullKind::ThetaPrime: return "thetaprime";
  }
  return "?";
}

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::A: return "A";
    case FactorKind::T1: return "T1";
    case FactorKind::T2: return "T2";
    case FactorKind::T3: return "T3";
    case FactorKind::D: return "D";
  }
  return "?";
}

NullKind parse_null_kind(std::string_view name) {
  for (auto k : {NullKind::Theta1, NullKind::Theta2, NullKind::Theta3, NullKind::ThetaPrime})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown theta null " + std::string(name));
}

FactorKind parse_factor_kind(std::string_view name) {
  for (auto k : {FactorKind::A, FactorKind::T1, FactorKind::T2, FactorKind::T3, FactorKind::D})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown theta factor " + std::string(name));
}

int product_factor_count(int order) { return (order + kLatticePerQ - 1) / kLatticePerQ + 1; }

namespace {

std::vector<GaussianRational> taylor(int z_bound, auto&& coeff) {
  std::vector<GaussianRational> out;
  Rational fact(1);
  for (int d = 0; d <= z_bound; ++d) {
    if (d > 0) fact *= Rational(d);
    out.push_back(coeff(d) * GaussianRational(Rational(1) / fact));
  }
  return out;
}

}  // namespace

std::vector<GaussianRational> taylor_sin(int z_bound) {
  return taylor(z_bound, [](int d) { return d % 2 ? GaussianRational((d / 2) % 2 ? -1 : 1) : GaussianRational(); });
}

std::vector<GaussianRational> taylor_cos(int z_bound) {
  return taylor(z_bound, [](int d) { return d % 2 ? GaussianRational() : GaussianRational((d / 2) % 2 ? -1 : 1); });
}

std::vector<GaussianRational> taylor_exp(int z_bound, const GaussianRational& a) {
  return taylor(z_bound, [&](int d) { return a.pow(d); });
}

namespace {

/// prod_{j=1}^{J} (1 + sign q^{(8j - shift)/8})^power, truncated.
QSeries euler_product(int order, int shift, int sign, int power, int count) {
  QSeries acc = QSeries::monomial(0, GaussianRational(1), order);
  for (int j = 1; j <= count; ++j) {
    const int k = kLatticePerQ * j - shift;
    if (k > order) break;
    const QSeries f = binomial_factor(k, sign);
    for (int p = 0; p < power; ++p) acc = (acc * f).truncated(order);
  }
  return acc;
}

/// (1 + s e^{2iz} q^a)(1 + s e^{-2iz} q^a)
RootFactor conjugate_pair(int a, int sign, int z_bound, int order) {
  auto e_plus = taylor_exp(z_bound, GaussianRational(Rational(0), Rational(2)));
  auto e_minus = taylor_exp(z_bound, GaussianRational(Rational(0), Rational(-2)));
  auto lift = [&](const std::vector<GaussianRational>& e) {
    RootFactor f(z_bound, order);
    for (int d = 0; d <= z_bound; ++d) {
      QSeries s(order);
      if (d == 0) s.add_to(0, GaussianRational(1));
      s.add_to(a, e[d] * GaussianRational(sign));
      f.set_slice(d, s);
    }
    return f;
  };
  return lift(e_plus) * lift(e_minus);
}

RootFactor pair_product(int shift, int sign, int z_bound, int order, int count) {
  std::vector<GaussianRational> one{GaussianRational(1)};
  RootFactor acc = RootFactor::from_z_series(one, z_bound, order);
  for (int j = 1; j <= count; ++j) {
    const int a = kLatticePerQ * j - shift;
    if (a > order) break;
    acc = acc * conjugate_pair(a, sign, z_bound, order);
  }
  return acc;
}

}  // namespace

ThetaNull theta_null(NullKind kind, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  const int count = product_factor_count(order);
  const QSeries euler = euler_product(order, 0, -1, 1, count);
  switch (kind) {
    case NullKind::Theta1: {
      QSeries s = (euler * euler_product(order, 0, +1, 2, count)).shifted(1).truncated(order);
      return {kind, s, Rational(2), 0};
    }
    case NullKind::Theta2:
      return {kind, (euler * euler_product(order, kHalfStep, -1, 2, count)).truncated(order), Rational(1), 0};
    case NullKind::Theta3:
      return {kind, (euler * euler_product(order, kHalfStep, +1, 2, count)).truncated(order), Rational(1), 0};
    case NullKind::ThetaPrime:
      return {kind, euler_product(order, 0, -1, 3, count).shifted(1).truncated(order), Rational(2), 1};
  }
  throw std::logic_error("unreachable");
}

RootFactor build_theta_factor(FactorKind kind, int order, int z_bound, int extra_factors) {
  const int count = product_factor_count(order) + extra_factors;
  RootFactor f(z_bound, order);
  switch (kind) {
    case FactorKind::A: {
      // z/sin z = 1/(sin z / z)
      auto s = taylor_sin(z_bound + 1);
      std::vector<GaussianRational> sinc(s.begin() + 1, s.end());
      RootFactor zsin = RootFactor::from_z_series(sinc, z_bound, order).inverse();
      f = zsin * pair_product(0, -1, z_bound, order, count).inverse();
      f *= euler_product(order, 0, -1, 2, count);
      break;
    }
    case FactorKind::T1: {
      f = RootFactor::from_z_series(taylor_cos(z_bound), z_bound, order) * pair_product(0, +1, z_bound, order, count);
      f *= euler_product(order, 0, +1, 2, count).inverse();
      break;
    }
    case FactorKind::T2:
      f = pair_product(kHalfStep, -1, z_bound, order, count);
      f *= euler_product(order, kHalfStep, -1, 2, count).inverse();
      break;
    case FactorKind::T3:
      f = pair_product(kHalfStep, +1, z_bound, order, count);
      f *= euler_product(order, kHalfStep, +1, 2, count).inverse();
      break;
    case FactorKind::D: {
      f = RootFactor::from_z_series(taylor_sin(z_bound), z_bound, order) * pair_product(0, -1, z_bound, order, count);
      f *= euler_product(order, 0, -1, 2, count).inverse();
      break;
    }
  }
  if (!f.is_real()) throw std::logic_error("theta factor " + to_string(kind) + " has non-real coefficients");
  const Parity expected = kind == FactorKind::D ? Parity::Odd : Parity::Even;
  if (f.parity() != expected) throw std::logic_error("theta factor " + to_string(kind) + " has wrong parity");
  return f;
}

std::string serialize_factor(const RootFactor& f) {
  std::ostringstream os;
  os << "rootfactor " << f.z_bound() << ' ' << f.q_bound() << '\n';
  for (int d = 0; d <= f.z_bound(); ++d)
    for (const auto& [k, c] : f.slice(d).terms()) os << d << ' ' << k << ' ' << c.str() << '\n';
  return os.str();
}

RootFactor deserialize_factor(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tag;
  int z_bound = 0, q_bound = 0;
  if (!(is >> tag >> z_bound >> q_bound) || tag != "rootfactor") throw std::invalid_argument("malformed factor header");
  RootFactor f(z_bound, q_bound);
  std::vector<QSeries> slices(static_cast<std::size_t>(z_bound) + 1, QSeries(q_bound));
  int d = 0, k = 0;
  std::string coeff;
  while (is >> d >> k >> coeff) {
    if (d < 0 || d > z_bound) throw std::invalid_argument("malformed factor term");
    slices[static_cast<std::size_t>(d)].add_to(k, GaussianRational::parse(coeff));
  }
  for (int i = 0; i <= z_bound; ++i) f.set_slice(i, slices[static_cast<std::size_t>(i)]);
  return f;
}

namespace {

std::filesystem::path cache_path(FactorKind kind, int order, int z_bound) {
  const char* dir = std::getenv("ANOMALY_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) /
         ("factor-" + to_string(kind) + "-" + std::to_string(order) + "-" + std::to_string(z_bound) + ".txt");
}

}  // namespace

std::shared_ptr<const RootFactor> theta_factor(FactorKind kind, int order, int z_bound) {
  using Key = std::tuple<FactorKind, int, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const RootFactor>> cache;
  const Key key{kind, order, z_bound};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  std::shared_ptr<const RootFactor> built;
  const auto path = cache_path(kind, order, z_bound);
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      built = std::make_shared<const RootFactor>(deserialize_factor(buf.str()));
    } catch (const std::exception&) {
      built.reset();  // unreadable entry: rebuild below
    }
  }
  if (!built) {
    RootFactor f = build_theta_factor(kind, order, z_bound);
    // One more product factor must not change anything up to the order bound.
    if (!(build_theta_factor(kind, order, z_bound, 1) == f))
      throw std::logic_error("product truncation insufficient for factor " + to_string(kind));
    built = std::make_shared<const RootFactor>(std::move(f));
    if (!path.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
      std::ofstream out(path);
      if (out) out << serialize_factor(*built);
    }
  }

  std::lock_guard lock(mutex);
  return cache.try_emplace(key, built).first->second;
}

QSeries jacobi_residual(const QSeries& theta_prime_reduced, const QSeries& theta1_reduced, const QSeries& theta2,
                        const QSeries& theta3) {
  return theta_prime_reduced - theta1_reduced * theta2 * theta3;
}

QSeries jacobi_check(int order) {
  return jacobi_residual(theta_null(NullKind::ThetaPrime, order).reduced, theta_null(NullKind::Theta1, order).reduced,
                         theta_null(NullKind::Theta2, order).reduced, theta_null(NullKind::Theta3, order).reduced);
}

}  // namespace anomaly
