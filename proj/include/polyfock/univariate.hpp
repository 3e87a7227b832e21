#pragma once

#include "polyfock/scalars.hpp"

#include <complex>
#include <string>
#include <vector>

namespace pfx {

/// Dense univariate polynomial over GaussianRational, coefficients stored
/// ascending. Supports the exact division needed by fraction-free
/// elimination and linear-factor peeling.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(GaussianRational c) { return UniPoly({std::move(c)}); }
  static UniPoly variable() { return UniPoly({GaussianRational(0), GaussianRational(1)}); }
  /// lambda - r
  static UniPoly linear_root(const GaussianRational& r) {
    return UniPoly({-r, GaussianRational(1)});
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational coeff(unsigned i) const {
    return i < c_.size() ? c_[i] : GaussianRational(0);
  }
  GaussianRational leading() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const GaussianRational& s) const;

  /// Exact division; throws if the remainder is nonzero.
  UniPoly divide_exact(const UniPoly& divisor) const;
  /// Quotient and remainder.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  GaussianRational evaluate(const GaussianRational& x) const;
  std::complex<double> evaluate(const std::complex<double>& x) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// All roots of a complex-coefficient polynomial by Durand-Kerner
/// iteration. Double precision; callers needing certainty must certify
/// candidates exactly against the exact polynomial.
std::vector<std::complex<double>> durand_kerner_roots(const std::vector<std::complex<double>>& coeffs_ascending);

/// Nearest rational p/q with q <= max_den via continued fractions.
Rational rationalize(double x, long long max_den = 1000000);

}  // namespace pfx
