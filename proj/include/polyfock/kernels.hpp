#pragma once

#include "polyfock/exp_poly.hpp"
#include "polyfock/univariate.hpp"

#include <map>

namespace pfx {

/// Monomial zeta^a zetabar^b z^c zbar^e in the four kernel variables.
struct KernelMonomial {
  unsigned zeta = 0, zetabar = 0, z = 0, zbar = 0;
  friend bool operator==(const KernelMonomial& x, const KernelMonomial& y) {
    return x.zeta == y.zeta && x.zetabar == y.zetabar && x.z == y.z && x.zbar == y.zbar;
  }
  friend bool operator<(const KernelMonomial& x, const KernelMonomial& y);
};

/// Reproducing kernel of a true level space: an exact polynomial in
/// (zeta, zetabar, z, zbar) carried against the factor e^{zeta * zbar}.
struct KernelFunc {
  unsigned level = 1;
  std::map<KernelMonomial, GaussianRational> terms;
};

/// q_z(zeta) = (1/(k-1)!) (zetabar - d/dzeta)^{k-1} (z - d/dzbar)^{k-1} e^{zeta zbar}.
KernelFunc true_kernel(unsigned k);

/// Extracts p_{k-1} with kernel = e^{zeta zbar} p_{k-1}(lambda),
/// lambda = (z - zeta)(zetabar - zbar). Throws if the kernel does not
/// factor through lambda (a structural-claim violation).
UniPoly kernel_factor_check(unsigned k);

enum class ProjectionMethod { kernel, gram };

/// Orthogonal projection of a polynomial onto the true level-k space
/// (d = 1). The kernel method integrates against the reproducing kernel
/// using the finite moment formula; the gram method peels the component
/// out of the true-level decomposition. Both are exact.
ExpPoly project_true(const ExpPoly& f, unsigned k, ProjectionMethod method);

/// Tensor projection onto the true multi-level space: coordinate-wise
/// application of the one-dimensional projection.
ExpPoly tensor_project(const ExpPoly& f, const std::vector<unsigned>& level,
                       ProjectionMethod method = ProjectionMethod::kernel);

}  // namespace pfx
