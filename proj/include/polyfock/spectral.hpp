#pragma once

#include "polyfock/exact_matrix.hpp"
#include "polyfock/normal_form.hpp"
#include "polyfock/univariate.hpp"

#include <complex>
#include <vector>

namespace pfx {

/// Exact k x k matrix of an operator restricted to the level-k flag space,
/// acting on columns (g_1, ..., g_k) of the lifted-basis model. Throws at
/// construction when the operator maps the space outside itself.
struct RestrictedMatrix {
  unsigned k = 0;
  ExactMatrix matrix;
  NormalForm source{1};
};

RestrictedMatrix restrict_to_Fk(const NormalForm& x, unsigned k);

/// Monic quadratic lambda^2 + b lambda + c that resisted rational splitting;
/// roots follow from the closed form (-b +- sqrt(b^2 - 4c))/2.
struct QuadraticFactor {
  GaussianRational b;
  GaussianRational c;
};

struct Eigenvalue {
  enum class Kind { exact, quadratic, approximate };
  Kind kind = Kind::exact;
  GaussianRational value;               // meaningful for kind == exact
  std::complex<double> approx{};        // float mirror, always populated
  double residual = 0.0;                // |p(root)| for approximate roots
  unsigned algebraic_multiplicity = 1;
  unsigned geometric_multiplicity = 0;  // exact roots only
  /// dim ker (A - lambda)^m for m = 1.. when the root is defective.
  std::vector<unsigned> generalized_kernel_dims;
  std::vector<std::vector<GaussianRational>> eigencolumns;  // exact roots only
  int quadratic_index = -1;             // index into SpectrumReport::quadratics
};

/// Exact characteristic polynomial plus eigenvalue data. Exact roots are
/// certified by exact substitution; rational splitting failures degrade
/// honestly to quadratic closed forms or float roots with residuals.
struct SpectrumReport {
  unsigned k = 0;
  UniPoly characteristic;
  std::vector<Eigenvalue> eigenvalues;
  std::vector<QuadraticFactor> quadratics;

  bool all_exact() const;
  /// Sorted exact values; throws if any eigenvalue is not exact.
  std::vector<GaussianRational> exact_values_with_multiplicity() const;
};

SpectrumReport spectrum(const RestrictedMatrix& rm);

/// adag a: the similarity-transformed magnetic Hamiltonian whose levels are
/// the equidistant values k - 1.
NormalForm landau_hamiltonian();

/// adag a + alpha adag (adag a - 1) + beta a.
NormalForm modified_landau(const GaussianRational& alpha, const GaussianRational& beta);

/// Exact nullspace basis of (matrix - lambda I): each column (c_1..c_k)
/// describes the eigenfunction family sum_j c_j (adag)^{j-1} f over analytic
/// f. Throws when lambda is not an eigenvalue.
std::vector<std::vector<GaussianRational>> eigenfunctions(const RestrictedMatrix& rm,
                                                          const GaussianRational& lambda);

}  // namespace pfx
