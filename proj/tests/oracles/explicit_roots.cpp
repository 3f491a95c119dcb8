#include "explicit_roots.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

XPoly XPoly::constant(int n_vars, int max_degree, const mpq_class& c) {
  XPoly p(n_vars, max_degree);
  p.add(Exps(n_vars, 0), c);
  return p;
}

XPoly XPoly::elementary(int n_vars, int max_degree, int i) {
  XPoly p(n_vars, max_degree);
  if (i > n_vars) return p;
  std::vector<bool> pick(n_vars, false);
  std::fill(pick.begin(), pick.begin() + i, true);
  do {
    Exps e(n_vars, 0);
    for (int j = 0; j < n_vars; ++j) e[j] = pick[j] ? 1 : 0;
    p.add(e, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return p;
}

void XPoly::add(const Exps& e, const mpq_class& c) {
  if (c == 0 || std::accumulate(e.begin(), e.end(), 0) > deg_) return;
  auto [it, fresh] = t_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

XPoly XPoly::operator*(const XPoly& o) const {
  XPoly out(n_, std::min(deg_, o.deg_));
  for (const auto& [ea, ca] : t_)
    for (const auto& [eb, cb] : o.t_) {
      Exps e(n_);
      for (int j = 0; j < n_; ++j) e[j] = ea[j] + eb[j];
      out.add(e, ca * cb);
    }
  return out;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  for (const auto& [e, c] : o.t_) add(e, c);
  return *this;
}

XSeries product_over_roots(const std::function<mpq_class(int, int)>& coeff, int n_roots, int max_degree, int order) {
  XSeries acc;
  acc.emplace(0, XPoly::constant(n_roots, max_degree, 1));
  for (int j = 0; j < n_roots; ++j) {
    XSeries factor;
    for (int k = 0; k <= order; ++k) {
      XPoly p(n_roots, max_degree);
      for (int m = 0; m <= max_degree; ++m) {
        Exps e(n_roots, 0);
        e[j] = m;
        p.add(e, coeff(m, k));
      }
      if (!p.terms().empty()) factor.emplace(k, p);
    }
    XSeries next;
    for (const auto& [ka, pa] : acc)
      for (const auto& [kb, pb] : factor) {
        if (ka + kb > order) continue;
        auto it = next.try_emplace(ka + kb, n_roots, max_degree).first;
        it->second += pa * pb;
      }
    acc = std::move(next);
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second.terms().empty(); });
  return acc;
}

}  // namespace oracle
