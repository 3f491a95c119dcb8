#include "anomaly/rational.hpp"

namespace anomaly {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  mpq_class v;
  if (text.empty() || v.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational: " + std::string(text));
  return Rational(std::move(v));
}

Rational Rational::pow2(int exponent) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? Rational(p) : Rational(mpq_class(mpz_class(1), p));
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero to a negative power");
    return (Rational(1) / *this).pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

int v2(const mpz_class& n) {
  if (n == 0) throw std::domain_error("2-adic valuation of zero");
  return static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (!text.ends_with("*i")) return {Rational::parse(text)};
  std::string_view body = text.substr(0, text.size() - 2);
  // Split at the sign that separates the real part, ignoring a leading sign.
  auto split = body.find_last_of("+-");
  if (split == std::string_view::npos || split == 0) return {Rational(0), Rational::parse(body)};
  Rational re = Rational::parse(body.substr(0, split));
  std::string_view im = body.substr(split);
  if (im.front() == '+') im.remove_prefix(1);
  return {re, Rational::parse(im)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  GaussianRational result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return im_.str() + "*i";
  std::string im = im_.str();
  if (im.front() != '-') im.insert(im.begin(), '+');
  return re_.str() + im + "*i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

}  // namespace anomaly
