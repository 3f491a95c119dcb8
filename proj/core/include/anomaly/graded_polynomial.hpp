#pragma once

// Sparse polynomials in weighted generators, truncated by total weight.
//
// Generators come in three families: the tangent bundle (n_i = e_i of the
// squared normalized roots, weight 2i), an auxiliary real bundle V (same
// convention) and the spin^c line variable u (weight 1). Cohomological degree
// is twice the weight. The standard basis swaps n_i for Pontryagin classes
// p_i = (-4)^i n_i and u for c = 2i·u.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "anomaly/rational.hpp"

namespace anomaly {

enum class Family { TM, V, U };
enum class Basis { Normalized, Standard };

std::string to_string(Family f);

struct Generator {
  std::string name;
  int weight = 0;
  Family family = Family::TM;
  int index = 0;  // i of n_i / p_i; 1 for u / c

  friend bool operator==(const Generator&, const Generator&) = default;
};

class GeneratorTable {
 public:
  static constexpr std::size_t kMaxGenerators = 16;

  GeneratorTable(std::vector<Generator> generators, Basis basis);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }
  Basis basis() const { return basis_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::optional<std::size_t> find(Family family, int index) const;
  std::size_t require(std::string_view name) const;

  friend bool operator==(const GeneratorTable& a, const GeneratorTable& b) {
    return a.basis_ == b.basis_ && a.gens_ == b.gens_;
  }

 private:
  std::vector<Generator> gens_;
  Basis basis_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

/// Normalized table with n_1..n_{tm} (TM), n_1..n_{v} (V) and optionally u.
TablePtr make_table(int tm_generators, int v_generators, bool with_u);
/// Same shape, standard names and basis flag.
TablePtr standard_counterpart(const GeneratorTable& normalized);

struct Monomial {
  std::array<std::uint8_t, GeneratorTable::kMaxGenerators> exps{};

  std::uint8_t operator[](std::size_t i) const { return exps[i]; }
  std::uint8_t& operator[](std::size_t i) { return exps[i]; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  int weight(const GeneratorTable& table) const;
  Monomial operator*(const Monomial& o) const;
  std::string str(const GeneratorTable& table) const;
};

class GradedPolynomial {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  /// Detached zero: adopts the table of whatever it is combined with.
  GradedPolynomial() = default;
  GradedPolynomial(TablePtr table, int max_weight);

  static GradedPolynomial constant(TablePtr table, int max_weight, const GaussianRational& c);
  static GradedPolynomial generator(TablePtr table, int max_weight, std::size_t index);
  static GradedPolynomial generator(TablePtr table, int max_weight, std::string_view name);

  const TablePtr& table() const { return table_; }
  int max_weight() const { return max_weight_; }
  const Terms& terms() const { return terms_; }
  bool attached() const { return table_ != nullptr; }

  bool is_zero() const { return terms_.empty(); }
  GaussianRational constant_term() const;
  GaussianRational coefficient(const Monomial& m) const;
  /// Adds c·m, dropping it when its weight exceeds the bound.
  void add_term(const Monomial& m, const GaussianRational& c);

  /// Homogeneous part of weight exactly w.
  GradedPolynomial component(int w) const;
  GradedPolynomial truncated(int w) const;
  /// Substitutes a homogeneous replacement of matching weight for one generator.
  GradedPolynomial substitute(std::size_t gen, const GradedPolynomial& replacement) const;
  GradedPolynomial substitute(std::string_view gen, const GradedPolynomial& replacement) const;
  /// Multiplies the weight-w part by m^w.
  GradedPolynomial scale_weights(const Rational& m) const;
  /// Inverse in the truncated ring; requires a nonzero constant term.
  GradedPolynomial inverse() const;
  GradedPolynomial pow(int exponent) const;

  bool is_real() const;
  GradedPolynomial real_part() const;
  GradedPolynomial imag_part() const;
  /// Largest weight with a stored term; -1 for zero.
  int top_weight() const;
  bool is_homogeneous(int w) const;

  /// Canonical text: terms by ascending weight, then descending exponents.
  std::string str() const;

  GradedPolynomial& operator+=(const GradedPolynomial& o);
  GradedPolynomial& operator-=(const GradedPolynomial& o);
  GradedPolynomial& operator*=(const GaussianRational& c);

  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator-(const GradedPolynomial& a);
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
  friend GradedPolynomial operator*(GradedPolynomial a, const GaussianRational& c) { return a *= c; }
  friend GradedPolynomial operator*(const GaussianRational& c, GradedPolynomial a) { return a *= c; }

  friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  void adopt(const GradedPolynomial& o);
  std::vector<Monomial> sorted_monomials() const;

  TablePtr table_;
  int max_weight_ = 0;
  Terms terms_;
};

inline bool is_zero(const GradedPolynomial& p) { return p.is_zero(); }
GradedPolynomial one_like(const GradedPolynomial& sample);
inline GradedPolynomial ring_inverse(const GradedPolynomial& p) { return p.inverse(); }

/// Rewrites n_i -> (-1/4)^i p_i and u -> -(i/2) c.
GradedPolynomial to_standard_basis(const GradedPolynomial& p);
/// Inverse map: p_i -> (-4)^i n_i, c -> 2i u.
GradedPolynomial from_standard_basis(const GradedPolynomial& p, const TablePtr& normalized);

}  // namespace anomaly
