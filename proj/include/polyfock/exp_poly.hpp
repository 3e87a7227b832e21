#pragma once

#include "polyfock/scalars.hpp"

#include <complex>
#include <map>
#include <vector>

namespace pfx {

/// Monomial z^zexp * zbar^zbexp in d complex variables.
struct MultiMonomial {
  std::vector<unsigned> zexp;
  std::vector<unsigned> zbexp;

  unsigned total_degree() const;
  friend bool operator==(const MultiMonomial& a, const MultiMonomial& b) {
    return a.zexp == b.zexp && a.zbexp == b.zbexp;
  }
  /// Graded-lexicographic on (zexp, zbexp); the canonical term order.
  friend bool operator<(const MultiMonomial& a, const MultiMonomial& b);
};

GaussianRational gr_pow(const GaussianRational& x, unsigned n);

/// A function on C^d of the form
///
///   e^{shift} * (sum_{m,n} c_{m,n} z^m zbar^n) * e^{u.z + v.zbar}
///
/// with exact GaussianRational data throughout. The class is closed under
/// the ladder operators, rotations, Weyl shifts and multiplication, and
/// every Gaussian-measure inner product of two members is an ExpScalar.
///
/// Canonical form: no zero coefficients; the scalar coefficient of the
/// prefactor is folded into the term coefficients (prefactor is a pure
/// exponential e^{shift}); the zero function has empty terms, shift = 0
/// and u = v = 0.
class ExpPoly {
 public:
  using TermMap = std::map<MultiMonomial, GaussianRational>;

  explicit ExpPoly(unsigned dims = 1);

  static ExpPoly zero(unsigned dims) { return ExpPoly(dims); }
  static ExpPoly constant(unsigned dims, GaussianRational c);
  static ExpPoly one(unsigned dims) { return constant(dims, GaussianRational(1)); }
  static ExpPoly monomial(unsigned dims, std::vector<unsigned> zexp,
                          std::vector<unsigned> zbexp, GaussianRational c = GaussianRational(1));
  /// z_j and zbar_j, 1-indexed coordinate.
  static ExpPoly z(unsigned dims, unsigned j = 1);
  static ExpPoly zbar(unsigned dims, unsigned j = 1);

  unsigned dims() const { return dims_; }
  const TermMap& terms() const { return terms_; }
  const std::vector<GaussianRational>& exp_u() const { return u_; }
  const std::vector<GaussianRational>& exp_v() const { return v_; }
  const GaussianRational& exp_shift() const { return shift_; }
  ExpScalar prefactor() const { return ExpScalar(GaussianRational(1), shift_); }

  bool is_zero() const { return terms_.empty(); }
  /// u = v = 0 and shift = 0: a plain polynomial in z and zbar.
  bool is_polynomial() const;
  /// No zbar dependence anywhere (all zbexp = 0 and v = 0).
  bool is_analytic() const;

  unsigned max_zbar_degree(unsigned j) const;
  unsigned max_total_degree() const;

  /// Replaces the term map entry; zero coefficients erase. For builders.
  void set_term(MultiMonomial m, GaussianRational c);
  void set_exp_u(std::vector<GaussianRational> u);
  void set_exp_v(std::vector<GaussianRational> v);
  void set_exp_shift(GaussianRational s);

  ExpPoly operator-() const;
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  ExpPoly scaled(const GaussianRational& c) const;
  ExpPoly scaled(const ExpScalar& c) const;

  friend bool operator==(const ExpPoly& a, const ExpPoly& b);
  friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

  /// Pointwise complex conjugate of the function.
  ExpPoly conjugate() const;

  /// a_j = d/dzbar_j (product rule covers the exponential factor).
  ExpPoly apply_lowering(unsigned j) const;
  /// adag_j = zbar_j - d/dz_j.
  ExpPoly apply_raising(unsigned j) const;
  /// Plain d/dz_j (used by the column-data conversion formulas).
  ExpPoly deriv_z(unsigned j) const;

  /// Composition with the inverse of an exactly unitary matrix U:
  /// returns f(U^{-1} z). Throws if U is not exactly unitary.
  ExpPoly rotate(const std::vector<std::vector<GaussianRational>>& U) const;

  /// Weyl shift (W_a f)(w) = e^{conj(a).w - |a|^2/2} f(w - a).
  /// With include_gauge = false the |a|^2/2 prefactor is omitted.
  ExpPoly weyl_shift(const std::vector<GaussianRational>& a, bool include_gauge) const;

  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

  std::string to_string() const;

 private:
  void canonicalize();
  void require_same_exp(const ExpPoly& o) const;

  unsigned dims_;
  GaussianRational shift_;
  TermMap terms_;
  std::vector<GaussianRational> u_;
  std::vector<GaussianRational> v_;
};

/// Exact <f, g> = integral of f * conj(g) against the Gaussian measure on C^d.
/// Conjugate-linear in g; the value is a single ExpScalar.
ExpScalar inner_product(const ExpPoly& f, const ExpPoly& g);
ExpScalar norm_sq(const ExpPoly& f);

}  // namespace pfx
