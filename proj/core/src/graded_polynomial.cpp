#include "anomaly/graded_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace anomaly {

std::string to_string(Family f) {
  switch (f) {
    case Family::TM: return "TM";
    case Family::V: return "V";
    case Family::U: return "U";
  }
  return "?";
}

GeneratorTable::GeneratorTable(std::vector<Generator> generators, Basis basis)
    : gens_(std::move(generators)), basis_(basis) {
  if (gens_.size() > kMaxGenerators) throw std::invalid_argument("too many generators");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].weight <= 0) throw std::invalid_argument("generator weight must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (gens_[i].name == gens_[j].name) throw std::invalid_argument("duplicate generator " + gens_[i].name);
  }
}

std::optional<std::size_t> GeneratorTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> GeneratorTable::find(Family family, int index) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].family == family && gens_[i].index == index) return i;
  return std::nullopt;
}

std::size_t GeneratorTable::require(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown generator " + std::string(name));
}

namespace {

std::string generator_name(Basis basis, Family family, int index) {
  const bool normalized = basis == Basis::Normalized;
  switch (family) {
    case Family::TM: return (normalized ? "n" : "p") + std::to_string(index) + "_M";
    case Family::V: return (normalized ? "n" : "p") + std::to_string(index) + "_V";
    case Family::U: return normalized ? "u" : "c";
  }
  return "?";
}

}  // namespace

TablePtr make_table(int tm_generators, int v_generators, bool with_u) {
  std::vector<Generator> gens;
  for (int i = 1; i <= tm_generators; ++i)
    gens.push_back({generator_name(Basis::Normalized, Family::TM, i), 2 * i, Family::TM, i});
  for (int i = 1; i <= v_generators; ++i)
    gens.push_back({generator_name(Basis::Normalized, Family::V, i), 2 * i, Family::V, i});
  if (with_u) gens.push_back({generator_name(Basis::Normalized, Family::U, 1), 1, Family::U, 1});
  return std::make_shared<const GeneratorTable>(std::move(gens), Basis::Normalized);
}

TablePtr standard_counterpart(const GeneratorTable& normalized) {
  std::vector<Generator> gens = normalized.generators();
  for (auto& g : gens) g.name = generator_name(Basis::Standard, g.family, g.index);
  return std::make_shared<const GeneratorTable>(std::move(gens), Basis::Standard);
}

int Monomial::weight(const GeneratorTable& table) const {
  int w = 0;
  for (std::size_t i = 0; i < table.size(); ++i) w += exps[i] * table[i].weight;
  return w;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] = static_cast<std::uint8_t>(exps[i] + o.exps[i]);
  return m;
}

std::string Monomial::str(const GeneratorTable& table) const {
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += table[i].name;
    if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

GradedPolynomial::GradedPolynomial(TablePtr table, int max_weight)
    : table_(std::move(table)), max_weight_(max_weight) {
  if (!table_) throw std::invalid_argument("null generator table");
  if (max_weight_ < 0) throw std::invalid_argument("negative weight bound");
}

GradedPolynomial GradedPolynomial::constant(TablePtr table, int max_weight, const GaussianRational& c) {
  GradedPolynomial p(std::move(table), max_weight);
  p.add_term(Monomial{}, c);
  return p;
}

GradedPolynomial GradedPolynomial::generator(TablePtr table, int max_weight, std::size_t index) {
  if (index >= table->size()) throw std::out_of_range("generator index");
  GradedPolynomial p(std::move(table), max_weight);
  Monomial m;
  m[index] = 1;
  p.add_term(m, GaussianRational(1));
  return p;
}

GradedPolynomial GradedPolynomial::generator(TablePtr table, int max_weight, std::string_view name) {
  const std::size_t index = table->require(name);
  return generator(std::move(table), max_weight, index);
}

GaussianRational GradedPolynomial::constant_term() const { return coefficient(Monomial{}); }

GaussianRational GradedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void GradedPolynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (!table_) throw std::logic_error("add_term on detached polynomial");
  if (m.weight(*table_) > max_weight_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedPolynomial::adopt(const GradedPolynomial& o) {
  if (!o.table_) return;
  if (!table_) {
    table_ = o.table_;
    max_weight_ = o.max_weight_;
    return;
  }
  if (table_ != o.table_ && !(*table_ == *o.table_)) throw std::invalid_argument("generator table mismatch");
  if (max_weight_ != o.max_weight_) throw std::invalid_argument("weight bound mismatch");
}

GradedPolynomial GradedPolynomial::component(int w) const {
  GradedPolynomial out = *this;
  std::erase_if(out.terms_, [&](const auto& t) { return t.first.weight(*table_) != w; });
  return out;
}

GradedPolynomial GradedPolynomial::truncated(int w) const {
  GradedPolynomial out = *this;
  std::erase_if(out.terms_, [&](const auto& t) { return t.first.weight(*table_) > w; });
  return out;
}

GradedPolynomial GradedPolynomial::substitute(std::size_t gen, const GradedPolynomial& replacement) const {
  if (!table_) return *this;
  if (gen >= table_->size()) throw std::out_of_range("generator index");
  GradedPolynomial repl = replacement;
  if (!repl.attached()) repl = GradedPolynomial(table_, max_weight_);
  GradedPolynomial probe(table_, max_weight_);
  probe.adopt(repl);
  if (!repl.is_homogeneous((*table_)[gen].weight))
    throw std::invalid_argument("replacement for " + (*table_)[gen].name + " is not homogeneous of weight " +
                                std::to_string((*table_)[gen].weight));

  std::vector<GradedPolynomial> powers{one_like(probe)};
  GradedPolynomial out(table_, max_weight_);
  for (const auto& [m, c] : terms_) {
    const int e = m[gen];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * repl);
    Monomial rest = m;
    rest[gen] = 0;
    for (const auto& [rm, rc] : powers[e].terms_) out.add_term(rest * rm, c * rc);
  }
  return out;
}

GradedPolynomial GradedPolynomial::substitute(std::string_view gen, const GradedPolynomial& replacement) const {
  if (!table_) return *this;
  return substitute(table_->require(gen), replacement);
}

GradedPolynomial GradedPolynomial::scale_weights(const Rational& m) const {
  GradedPolynomial out = *this;
  for (auto& [mono, c] : out.terms_) c *= GaussianRational(m.pow(mono.weight(*table_)));
  return out;
}

GradedPolynomial GradedPolynomial::inverse() const {
  const GaussianRational c0 = constant_term();
  if (c0.is_zero()) throw std::domain_error("polynomial with zero constant term is not invertible");
  const GaussianRational inv0 = c0.inverse();
  // p = c0 (1 + r) with r of positive weight; 1/(1+r) = sum (-r)^n, n <= W.
  GradedPolynomial minus_r = *this * (-inv0);
  minus_r.add_term(Monomial{}, GaussianRational(1));
  GradedPolynomial sum = one_like(*this), power = one_like(*this);
  for (int n = 1; n <= max_weight_; ++n) {
    power = power * minus_r;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * inv0;
}

GradedPolynomial GradedPolynomial::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  GradedPolynomial result = one_like(*this), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

bool GradedPolynomial::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

GradedPolynomial GradedPolynomial::real_part() const {
  GradedPolynomial out = *this;
  out.terms_.clear();
  for (const auto& [m, c] : terms_) out.add_term(m, GaussianRational(c.re()));
  return out;
}

GradedPolynomial GradedPolynomial::imag_part() const {
  GradedPolynomial out = *this;
  out.terms_.clear();
  for (const auto& [m, c] : terms_) out.add_term(m, GaussianRational(c.im()));
  return out;
}

int GradedPolynomial::top_weight() const {
  int w = -1;
  for (const auto& t : terms_) w = std::max(w, t.first.weight(*table_));
  return w;
}

bool GradedPolynomial::is_homogeneous(int w) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.weight(*table_) == w; });
}

std::vector<Monomial> GradedPolynomial::sorted_monomials() const {
  std::vector<std::pair<int, Monomial>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& t : terms_) keyed.emplace_back(t.first.weight(*table_), t.first);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<Monomial> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(k.second);
  return out;
}

std::string GradedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Monomial& m : sorted_monomials()) {
    const GaussianRational& c = terms_.at(m);
    std::string coeff = c.str();
    if (!c.is_real() && !c.re().is_zero()) coeff = "(" + coeff + ")";
    std::string mono = m.str(*table_);
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += coeff;
    else if (c == GaussianRational(1))
      out += mono;
    else
      out += coeff + "*" + mono;
  }
  return out;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
  adopt(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
  adopt(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

GradedPolynomial operator-(const GradedPolynomial& a) {
  GradedPolynomial out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  GradedPolynomial out;
  out.adopt(a);
  out.adopt(b);
  if (a.is_zero() || b.is_zero()) return out;
  const GeneratorTable& table = *out.table_;
  std::vector<std::pair<int, const std::pair<const Monomial, GaussianRational>*>> bw;
  bw.reserve(b.terms_.size());
  for (const auto& t : b.terms_) bw.emplace_back(t.first.weight(table), &t);
  std::sort(bw.begin(), bw.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [am, ac] : a.terms_) {
    const int aw = am.weight(table);
    for (const auto& [w, bt] : bw) {
      if (aw + w > out.max_weight_) break;
      out.add_term(am * bt->first, ac * bt->second);
    }
  }
  return out;
}

GradedPolynomial one_like(const GradedPolynomial& sample) {
  if (!sample.attached()) throw std::logic_error("one_like needs an attached polynomial");
  return GradedPolynomial::constant(sample.table(), sample.max_weight(), GaussianRational(1));
}

namespace {

GaussianRational basis_factor(const Generator& g, bool to_standard) {
  if (g.family == Family::U) {
    // u = -(i/2) c  and  c = 2i u
    return to_standard ? GaussianRational(Rational(0), Rational(-1, 2)) : GaussianRational(Rational(0), Rational(2));
  }
  return to_standard ? GaussianRational(Rational(-1, 4).pow(g.index)) : GaussianRational(Rational(-4).pow(g.index));
}

GradedPolynomial rebase(const GradedPolynomial& p, const TablePtr& target, bool to_standard) {
  GradedPolynomial out(target, p.max_weight());
  const GeneratorTable& src = *p.table();
  std::vector<GaussianRational> factors;
  for (const auto& g : src.generators()) factors.push_back(basis_factor(g, to_standard));
  for (const auto& [m, c] : p.terms()) {
    GaussianRational coeff = c;
    for (std::size_t i = 0; i < src.size(); ++i)
      if (m[i]) coeff *= factors[i].pow(m[i]);
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace

GradedPolynomial to_standard_basis(const GradedPolynomial& p) {
  if (!p.attached()) return p;
  if (p.table()->basis() != Basis::Normalized) throw std::invalid_argument("polynomial is not in the normalized basis");
  return rebase(p, standard_counterpart(*p.table()), true);
}

GradedPolynomial from_standard_basis(const GradedPolynomial& p, const TablePtr& normalized) {
  if (!p.attached()) return p;
  if (p.table()->basis() != Basis::Standard) throw std::invalid_argument("polynomial is not in the standard basis");
  if (!(*standard_counterpart(*normalized) == *p.table())) throw std::invalid_argument("generator table mismatch");
  return rebase(p, normalized, false);
}

}  // namespace anomaly
