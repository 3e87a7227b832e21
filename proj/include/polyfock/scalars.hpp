#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pfx {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt falling_factorial(unsigned n, unsigned k);  // n!/(n-k)!

/// Exact rational number. Always reduced, denominator positive, zero is 0/1.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}
  Rational(const BigInt& n) : value_(n) {}
  Rational(long long n, long long d) { init(BigInt(n), BigInt(d)); }
  Rational(const BigInt& n, const BigInt& d) { init(n, d); }

  static Rational from_string(const std::string& s);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  bool is_negative() const { return value_ < 0; }
  bool is_positive() const { return value_ > 0; }

  Rational operator-() const { return Rational(BigRational(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  Rational inverse() const;
  Rational abs() const { return is_negative() ? -*this : *this; }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;
  double to_double() const;

 private:
  explicit Rational(const BigRational& v) : value_(v) {}
  void init(const BigInt& n, const BigInt& d);
  BigRational value_;
};

inline Rational rational_factorial(unsigned n) { return Rational(factorial(n)); }

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(long long r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long long r, long long i) : re(r), im(i) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }
  Rational abs_sq() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational inverse() const;

  /// "p/q" for real values, "(re, im)" otherwise.
  std::string to_string() const;
};

/// Scalar of the form coeff * e^{exponent}. Zero is canonically (0, 0).
///
/// Addition is defined only for equal exponents (or a zero operand); a
/// mismatch throws, signalling that a computation left the exact domain.
class ExpScalar {
 public:
  ExpScalar() = default;
  ExpScalar(GaussianRational coeff) : coeff_(std::move(coeff)) { canonicalize(); }
  ExpScalar(long long c) : coeff_(c) {}
  ExpScalar(GaussianRational coeff, GaussianRational exponent)
      : coeff_(std::move(coeff)), exponent_(std::move(exponent)) {
    canonicalize();
  }

  static ExpScalar one() { return ExpScalar(GaussianRational(1)); }
  static ExpScalar zero() { return ExpScalar(); }

  const GaussianRational& coeff() const { return coeff_; }
  const GaussianRational& exponent() const { return exponent_; }

  bool is_zero() const { return coeff_.is_zero(); }
  ExpScalar conj() const { return {coeff_.conj(), exponent_.conj()}; }

  ExpScalar& operator*=(const ExpScalar& o);
  ExpScalar& operator+=(const ExpScalar& o);
  ExpScalar operator-() const { return {-coeff_, exponent_}; }

  friend ExpScalar operator*(ExpScalar a, const ExpScalar& b) { return a *= b; }
  friend ExpScalar operator+(ExpScalar a, const ExpScalar& b) { return a += b; }
  friend ExpScalar operator-(ExpScalar a, const ExpScalar& b) { return a += -b; }

  friend ExpScalar operator*(const GaussianRational& s, ExpScalar a) {
    a.coeff_ *= s;
    a.canonicalize();
    return a;
  }

  friend bool operator==(const ExpScalar& a, const ExpScalar& b) {
    return a.coeff_ == b.coeff_ && a.exponent_ == b.exponent_;
  }
  friend bool operator!=(const ExpScalar& a, const ExpScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void canonicalize() {
    if (coeff_.is_zero()) exponent_ = GaussianRational();
  }
  GaussianRational coeff_;
  GaussianRational exponent_;
};

}  // namespace pfx
