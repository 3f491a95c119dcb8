#pragma once

// Truncated series in q with exponents on the (1/8)Z lattice.
//
// Key k stands for q^(k/8). Every series carries an order bound N: all
// coefficients with k <= N are known exactly, everything above is unknown.
// Asking for a coefficient beyond the bound is an error, never a silent zero.

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "anomaly/rational.hpp"

namespace anomaly {

class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Lattice units per power of q.
inline constexpr int kLatticePerQ = 8;
inline constexpr int kHalfStep = 4;

namespace detail {

template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}

}  // namespace detail

template <class C>
class PuiseuxSeries {
 public:
  using Coefficient = C;
  /// Bound used for exact (finite) series.
  static constexpr int kExact = 1 << 28;

  PuiseuxSeries() = default;
  explicit PuiseuxSeries(int order_bound) : bound_(std::min(order_bound, kExact)) {}

  static PuiseuxSeries monomial(int k, C c, int order_bound = kExact) {
    PuiseuxSeries s(order_bound);
    s.add_to(k, std::move(c));
    return s;
  }

  int order_bound() const { return bound_; }
  bool exact() const { return bound_ >= kExact; }
  const std::map<int, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::optional<int> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  C coefficient(int k) const {
    if (k > bound_)
      throw TruncationError("coefficient of q^(" + std::to_string(k) + "/8) is beyond the truncation bound " +
                            std::to_string(bound_));
    auto it = terms_.find(k);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_to(int k, const C& c) {
    if (k > bound_ || detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  PuiseuxSeries truncated(int n) const {
    PuiseuxSeries out(std::min(n, bound_));
    for (const auto& [k, c] : terms_)
      if (k <= out.bound_) out.terms_.emplace(k, c);
    return out;
  }

  /// True when every stored exponent is a multiple of `step` lattice units.
  bool on_lattice(int step) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first % step == 0; });
  }

  template <class F>
  auto map(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    PuiseuxSeries<D> out(bound_);
    for (const auto& [k, c] : terms_) out.add_to(k, f(c));
    return out;
  }

  /// q^(1/2) -> -q^(1/2); every exponent must be a multiple of 1/2.
  PuiseuxSeries sign_flip() const {
    if (!on_lattice(kHalfStep)) throw std::domain_error("sign flip needs exponents on the 1/2 lattice");
    PuiseuxSeries out = *this;
    for (auto& [k, c] : out.terms_)
      if ((k / kHalfStep) % 2 != 0) c = -c;
    return out;
  }

  PuiseuxSeries shifted(int k) const {
    PuiseuxSeries out(exact() ? kExact : bound_ + k);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  PuiseuxSeries inverse() const {
    if (terms_.empty()) throw std::domain_error("inverse of a zero series");
    const int a = terms_.begin()->first;
    const C inv_lead = ring_inverse(terms_.begin()->second);
    if (exact() && terms_.size() == 1) return monomial(-a, inv_lead);
    const int rel = (exact() ? kExact : bound_) - a;
    if (exact()) throw std::domain_error("inverse of an exact non-monomial series needs a truncation bound");
    PuiseuxSeries out(bound_ - 2 * a);
    std::map<int, C> h;  // h[j] = coefficient at -a + j
    for (int j = 0; j <= rel; ++j) {
      C acc = j == 0 ? one_like(inv_lead) : C{};
      for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        const int i = it->first - a;
        if (i > j) break;
        auto hit = h.find(j - i);
        if (hit != h.end()) acc -= it->second * hit->second;
      }
      if (!detail::coeff_is_zero(acc)) h.emplace(j, acc * inv_lead);
    }
    for (auto& [j, c] : h) out.add_to(-a + j, c);
    return out;
  }

  PuiseuxSeries pow(int m) const {
    if (m < 0) return inverse().pow(-m);
    if (m == 0) {
      if (terms_.empty()) throw std::domain_error("0^0 on series");
      return monomial(0, one_like(terms_.begin()->second), bound_);
    }
    PuiseuxSeries result = *this, base = *this;
    --m;
    while (m > 0) {
      if (m & 1) result = result * base;
      m >>= 1;
      if (m) base = base * base;
    }
    return result;
  }

  PuiseuxSeries& operator+=(const PuiseuxSeries& o) {
    bound_ = std::min(bound_, o.bound_);
    std::erase_if(terms_, [&](const auto& t) { return t.first > bound_; });
    for (const auto& [k, c] : o.terms_) add_to(k, c);
    return *this;
  }
  PuiseuxSeries& operator-=(const PuiseuxSeries& o) {
    bound_ = std::min(bound_, o.bound_);
    std::erase_if(terms_, [&](const auto& t) { return t.first > bound_; });
    for (const auto& [k, c] : o.terms_) add_to(k, -c);
    return *this;
  }

  template <class S>
  PuiseuxSeries& scale(const S& s) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * s;
      if (detail::coeff_is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
  friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
  friend PuiseuxSeries operator-(const PuiseuxSeries& a) {
    PuiseuxSeries out = a;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) { return series_mul(a, b); }
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a.terms_ == b.terms_; }

  /// "c * q^(a/b) + ... + O(q^(N/8))"; coefficients rendered by `fmt`.
  template <class F>
  std::string str(F&& fmt) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      std::string cs = fmt(c);
      if (k == 0) {
        os << cs;
      } else {
        const bool plain = cs.find_first_of(" +*", 1) == std::string::npos;
        if (cs == "1")
          os << q_power(k);
        else if (plain)
          os << cs << "*" << q_power(k);
        else
          os << "(" << cs << ")*" << q_power(k);
      }
    }
    if (first) os << "0";
    if (!exact()) os << " + O(" << q_power(bound_ + 1) << ")";
    return os.str();
  }

  static std::string q_power(int k) {
    Rational e(k, kLatticePerQ);
    if (e == Rational(1)) return "q";
    if (e.is_integer()) return "q^" + e.str();
    return "q^(" + e.str() + ")";
  }

 private:
  template <class A, class B>
  friend auto series_mul(const PuiseuxSeries<A>& a, const PuiseuxSeries<B>& b);
  template <class D>
  friend class PuiseuxSeries;

  int bound_ = kExact;
  std::map<int, C> terms_;
};

namespace detail {

/// Bound of a product: f known to N_f with valuation v_f, g likewise.
template <class A, class B>
int product_bound(const PuiseuxSeries<A>& a, const PuiseuxSeries<B>& b) {
  constexpr long long kExact = PuiseuxSeries<A>::kExact;
  auto val = [](const auto& s) -> long long {
    if (auto v = s.valuation()) return *v;
    return s.exact() ? kExact : static_cast<long long>(s.order_bound()) + 1;
  };
  long long ba = a.exact() ? 4 * kExact : static_cast<long long>(a.order_bound()) + val(b);
  long long bb = b.exact() ? 4 * kExact : static_cast<long long>(b.order_bound()) + val(a);
  long long bound = std::min(ba, bb);
  return static_cast<int>(std::clamp<long long>(bound, -kExact, kExact));
}

}  // namespace detail

template <class A, class B>
auto series_mul(const PuiseuxSeries<A>& a, const PuiseuxSeries<B>& b) {
  using D = std::decay_t<decltype(std::declval<const A&>() * std::declval<const B&>())>;
  PuiseuxSeries<D> out(detail::product_bound(a, b));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (ka + kb > out.bound_) break;
      out.add_to(ka + kb, ca * cb);
    }
  }
  return out;
}

using QSeries = PuiseuxSeries<GaussianRational>;

inline std::string series_str(const QSeries& s) {
  return s.str([](const GaussianRational& c) { return c.str(); });
}

/// 1 + sign·q^(k/8) as an exact series.
inline QSeries binomial_factor(int k, int sign) {
  QSeries s = QSeries::monomial(0, GaussianRational(1));
  s.add_to(k, GaussianRational(sign));
  return s;
}

}  // namespace anomaly
