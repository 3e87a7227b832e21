#include "polyfock/scalars.hpp"

#include <sstream>

namespace pfx {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

void Rational::init(const BigInt& n, const BigInt& d) {
  if (d.is_zero()) throw std::domain_error("Rational: division by zero");
  // cpp_rational reduces to lowest terms but insists on a positive
  // denominator at construction.
  if (d < 0)
    value_ = BigRational(-n, BigInt(-d));
  else
    value_ = BigRational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(denominator(), numerator());
}

Rational Rational::from_string(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + s + "'"); };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

std::string Rational::to_string() const {
  std::string s = numerator().str();
  if (!is_integer()) s += "/" + denominator().str();
  return s;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  Rational n = abs_sq();
  if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re.to_string();
  return "(" + re.to_string() + ", " + im.to_string() + ")";
}

ExpScalar& ExpScalar::operator*=(const ExpScalar& o) {
  coeff_ *= o.coeff_;
  exponent_ += o.exponent_;
  canonicalize();
  return *this;
}

ExpScalar& ExpScalar::operator+=(const ExpScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (exponent_ != o.exponent_)
    throw std::domain_error("ExpScalar: incommensurable exponents e^{" + exponent_.to_string() +
                            "} vs e^{" + o.exponent_.to_string() + "}");
  coeff_ += o.coeff_;
  canonicalize();
  return *this;
}

std::string ExpScalar::to_string() const {
  if (exponent_.is_zero()) return coeff_.to_string();
  return coeff_.to_string() + "*e^{" + exponent_.to_string() + "}";
}

}  // namespace pfx
