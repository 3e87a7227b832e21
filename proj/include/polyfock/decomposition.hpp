#pragma once

#include "polyfock/exp_poly.hpp"
#include "polyfock/normal_form.hpp"

#include <map>
#include <vector>

namespace pfx {

/// Orthogonal true-level components of a polynomial. Keys are level
/// multi-indices (single-entry for d = 1), all >= 1 componentwise; the
/// components sum back to the decomposed function exactly.
struct TrueLevelDecomposition {
  unsigned dims = 1;
  std::map<std::vector<unsigned>, ExpPoly> components;

  ExpPoly component(const std::vector<unsigned>& index) const;
  ExpPoly sum() const;
};

/// Column data (g_1, ..., g_k) of analytic functions representing
/// psi = sum_j (adag)^{j-1} g_j. Un-normalized convention: no 1/sqrt((j-1)!).
struct FockColumn {
  unsigned k = 0;
  std::vector<ExpPoly> functions;  // size k, each analytic, dims = 1
};

/// Smallest level L >= 1 with a^L f = 0; equals 1 + max zbar-degree for
/// polynomial data. Throws if f carries a zbar exponential factor (never
/// annihilated). The zero function has level 1. d = 1.
unsigned membership_level(const ExpPoly& f);

/// Level test via the Euler-Cartan product: true iff
/// prod_{m=0}^{k-1} (adag a - m) f = 0. Agrees with membership_level <= k.
bool euler_cartan_membership(const ExpPoly& f, unsigned k);

/// (adag)^{k-1} g for analytic g. norm_sq scales by (k-1)!.
ExpPoly lift(const ExpPoly& g, unsigned k);

/// Inverse of lift on pure level-k elements: a^{k-1} psi / (k-1)!.
/// Throws if psi is not a pure level-k element.
ExpPoly lower(const ExpPoly& psi, unsigned k);

/// Splits a d = 1 polynomial into its true-level components by peeling the
/// top level: g_K = a^{K-1} f / (K-1)!, h_K = (adag)^{K-1} g_K, recurse on
/// f - h_K. Components are mutually orthogonal and re-sum to f.
TrueLevelDecomposition true_decompose(const ExpPoly& f);

/// Collects the column data psi = sum_p (adag)^{p-1} g_p into the plain
/// zbar-power representation psi = sum_l zbar^{l-1} phi_l(z); returns
/// (phi_1, ..., phi_k) via the closed-form derivative sums.
std::vector<ExpPoly> fock_to_poly(const FockColumn& col);

/// Inverse of fock_to_poly: recovers the column data from the zbar-power
/// coefficients by back substitution.
FockColumn poly_to_fock(const std::vector<ExpPoly>& phi);

/// d-dimensional true-level decomposition by coordinate-wise peeling.
TrueLevelDecomposition multi_true_decompose(const ExpPoly& f);

/// Coordinate-wise lift prod_j (adag_j)^{k_j - 1} applied to analytic phi.
ExpPoly multi_true_represent(const ExpPoly& phi, const std::vector<unsigned>& level);

/// Operator test for the k-homogeneous space:
/// prod_{m=0}^{k-1} (sum_i adag_i a_i - m) f = 0.
bool homogeneous_membership(const ExpPoly& f, unsigned k);

/// Derivative test: every mixed zbar-derivative of total order k kills f.
/// Equivalent to homogeneous_membership.
bool homogeneous_alt_membership(const ExpPoly& f, unsigned k);

/// Groupwise quasi-homogeneous test for a composition m of d (sum m_j = d)
/// and per-group orders k_j. Cross-checked internally against the
/// per-group derivative form.
bool quasi_membership(const ExpPoly& f, const std::vector<unsigned>& groups,
                      const std::vector<unsigned>& orders);

/// Number of true-level components of the k-homogeneous space over C^d:
/// binomial(d + k - 1, d).
BigInt homogeneous_component_count(unsigned d, unsigned k);

/// All level multi-indices p >= (1,...,1) contributing to the
/// k-homogeneous space: |p| <= k + d - 1.
std::vector<std::vector<unsigned>> homogeneous_level_indices(unsigned d, unsigned k);

}  // namespace pfx
