#include "anomaly/modforms.hpp"

#include "anomaly/theta.hpp"

namespace anomaly {

std::string to_string(DeltaEps which) {
  switch (which) {
    case DeltaEps::Delta1: return "delta1";
    case DeltaEps::Eps1: return "eps1";
    case DeltaEps::Delta2: return "delta2";
    case DeltaEps::Eps2: return "eps2";
  }
  return "?";
}

std::string to_string(Group g) { return g == Group::Gamma0 ? "Gamma_0(2)" : "Gamma^0(2)"; }

DeltaEps parse_delta_eps(std::string_view name) {
  for (auto w : {DeltaEps::Delta1, DeltaEps::Eps1, DeltaEps::Delta2, DeltaEps::Eps2})
    if (to_string(w) == name) return w;
  throw std::invalid_argument("unknown modular form " + std::string(name));
}

QSeries delta_eps(DeltaEps which, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  // θ₁(0)⁴ = 16·(reduced)⁴ lands on the 1/2 lattice; the others are already there.
  auto fourth = [&](NullKind kind) {
    const ThetaNull t = theta_null(kind, order);
    QSeries s = t.reduced.pow(4).truncated(order);
    s.scale(GaussianRational(t.rational_factor.pow(4)));
    return s;
  };
  const QSeries t3 = fourth(NullKind::Theta3);
  QSeries out(order);
  switch (which) {
    case DeltaEps::Delta1:
      out = fourth(NullKind::Theta2) + t3;
      out.scale(GaussianRational(Rational(1, 8)));
      break;
    case DeltaEps::Eps1:
      out = (fourth(NullKind::Theta2) * t3).truncated(order);
      out.scale(GaussianRational(Rational(1, 16)));
      break;
    case DeltaEps::Delta2:
      out = fourth(NullKind::Theta1) + t3;
      out.scale(GaussianRational(Rational(-1, 8)));
      break;
    case DeltaEps::Eps2:
      out = (fourth(NullKind::Theta1) * t3).truncated(order);
      out.scale(GaussianRational(Rational(1, 16)));
      break;
  }
  if (!out.on_lattice(kHalfStep)) throw std::logic_error(to_string(which) + " left the 1/2 lattice");
  return out;
}

QSeries basis_element(Group group, int k, int r, int order) {
  if (k < 0 || r < 0 || 2 * r > k)
    throw std::invalid_argument("basis index r=" + std::to_string(r) + " out of range for k=" + std::to_string(k));
  const bool upper = group == Group::GammaUpper;
  QSeries d = delta_eps(upper ? DeltaEps::Delta2 : DeltaEps::Delta1, order);
  d.scale(GaussianRational(8));
  const QSeries e = delta_eps(upper ? DeltaEps::Eps2 : DeltaEps::Eps1, order);
  QSeries out = QSeries::monomial(0, GaussianRational(1), order);
  if (k - 2 * r > 0) out = (out * d.pow(k - 2 * r)).truncated(order);
  if (r > 0) out = (out * e.pow(r)).truncated(order);
  return out;
}

}  // namespace anomaly
