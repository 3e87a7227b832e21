#pragma once

#include "polyfock/exact_matrix.hpp"
#include "polyfock/normal_form.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pfx {

/// Exact k x k matrices of the sl(2) generators acting on columns
/// (g_1, ..., g_k) in the un-normalized lifted basis psi = sum (adag)^{j-1} g_j:
///   lowering: superdiagonal 1, 2, ..., k-1
///   cartan:   diag(j - (k-1)/2), j = 0..k-1
///   raising:  subdiagonal j - k, j = 1..k-1
struct ModelMatrices {
  unsigned k;
  ExactMatrix raising;
  ExactMatrix cartan;
  ExactMatrix lowering;
};

ModelMatrices model_matrices(unsigned k);

/// The same three matrices conjugated to the orthonormal column basis,
/// where the entries pick up square roots: returned as floats.
struct OrthonormalMatrices {
  unsigned k;
  std::vector<std::vector<double>> raising;
  std::vector<std::vector<double>> cartan;
  std::vector<std::vector<double>> lowering;
};

OrthonormalMatrices orthonormal_matrices_float(unsigned k);

/// Checks that the function-side action of each sl(2) generator on lifted
/// monomial columns coincides exactly with the model-matrix action, for all
/// monomials z^n, n <= degree_bound, in every column slot.
struct IntertwineReport {
  bool ok = true;
  unsigned checks = 0;
  std::string first_failure;
};

IntertwineReport intertwine_check(unsigned k, unsigned degree_bound);

/// Elementary matrix E_{m,n} (1-indexed) together with an operator
/// expression in Jp/J0/Jm/I that generates it: Lagrange idempotents in the
/// cartan matrix transported by rescaled ladder powers.
struct MatrixUnit {
  ExactMatrix matrix;
  std::string expression;
};

std::map<std::pair<unsigned, unsigned>, MatrixUnit> matrix_units(unsigned k);

/// Coefficients s_{m,n} with T = sum s_{m,n} E_{m,n}; reconstruction is
/// verified exactly against the generated units.
ExactMatrix scalar_operator_decompose(const ExactMatrix& t, unsigned k);

}  // namespace pfx
