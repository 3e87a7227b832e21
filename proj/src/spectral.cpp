#include "polyfock/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace pfx {

RestrictedMatrix restrict_to_Fk(const NormalForm& x, unsigned k) {
  if (x.dims() != 1) throw std::domain_error("restrict_to_Fk: d = 1 only");
  if (k < 1) throw std::domain_error("restrict_to_Fk: k must be >= 1");
  unsigned max_p = 0;
  for (const auto& [key, c] : x.terms()) max_p = std::max(max_p, key.adag[0]);
  // Accumulate into k + max_p rows; overflow rows must cancel to zero.
  ExactMatrix wide(k + max_p, k);
  for (const auto& [key, c] : x.terms()) {
    unsigned p = key.adag[0], q = key.a[0];
    for (unsigned j = 1; j <= k; ++j) {
      if (q > j - 1) continue;  // a^q kills (adag)^{j-1} f
      unsigned row = j - q + p;
      GaussianRational entry = c * GaussianRational(Rational(falling_factorial(j - 1, q)));
      wide.at(row - 1, j - 1) += entry;
    }
  }
  for (unsigned r = k; r < k + max_p; ++r)
    for (unsigned j = 0; j < k; ++j)
      if (!wide.at(r, j).is_zero())
        throw std::domain_error("restrict_to_Fk: operator does not preserve the level-" +
                                std::to_string(k) + " space");
  RestrictedMatrix rm;
  rm.k = k;
  rm.matrix = ExactMatrix(k, k);
  for (unsigned r = 0; r < k; ++r)
    for (unsigned j = 0; j < k; ++j) rm.matrix.at(r, j) = wide.at(r, j);
  rm.source = x;
  return rm;
}

bool SpectrumReport::all_exact() const {
  for (const auto& e : eigenvalues)
    if (e.kind != Eigenvalue::Kind::exact) return false;
  return true;
}

std::vector<GaussianRational> SpectrumReport::exact_values_with_multiplicity() const {
  std::vector<GaussianRational> vals;
  for (const auto& e : eigenvalues) {
    if (e.kind != Eigenvalue::Kind::exact)
      throw std::domain_error("SpectrumReport: non-exact eigenvalue present");
    for (unsigned i = 0; i < e.algebraic_multiplicity; ++i) vals.push_back(e.value);
  }
  std::sort(vals.begin(), vals.end(), [](const GaussianRational& a, const GaussianRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return vals;
}

namespace {

std::complex<double> to_complex(const GaussianRational& g) {
  return {g.re.to_double(), g.im.to_double()};
}

void fill_exact_eigendata(Eigenvalue& e, const ExactMatrix& a) {
  const unsigned n = a.rows();
  ExactMatrix shifted = a - ExactMatrix::identity(n).scaled(e.value);
  auto basis = nullspace(shifted);
  e.geometric_multiplicity = static_cast<unsigned>(basis.size());
  e.eigencolumns = std::move(basis);
  if (e.geometric_multiplicity < e.algebraic_multiplicity) {
    ExactMatrix power = shifted;
    for (unsigned m = 1; m <= e.algebraic_multiplicity; ++m) {
      unsigned dim = n - rank(power);
      e.generalized_kernel_dims.push_back(dim);
      if (dim >= e.algebraic_multiplicity) break;
      power = power * shifted;
    }
  }
}

}  // namespace

SpectrumReport spectrum(const RestrictedMatrix& rm) {
  SpectrumReport rep;
  rep.k = rm.k;
  rep.characteristic = char_poly(rm.matrix);
  UniPoly remaining = rep.characteristic;

  // Exact roots: rationalize float roots and certify each candidate by
  // exact substitution, then peel the certified linear factors.
  std::vector<std::complex<double>> fcoeffs;
  for (const auto& c : rep.characteristic.coeffs()) fcoeffs.push_back(to_complex(c));
  std::vector<GaussianRational> candidates;
  for (const auto& r : durand_kerner_roots(fcoeffs)) {
    GaussianRational cand(rationalize(r.real()), rationalize(r.imag()));
    if (std::find(candidates.begin(), candidates.end(), cand) == candidates.end())
      candidates.push_back(cand);
  }
  for (const auto& cand : candidates) {
    if (remaining.degree() < 1) break;
    if (!remaining.evaluate(cand).is_zero()) continue;
    Eigenvalue e;
    e.kind = Eigenvalue::Kind::exact;
    e.value = cand;
    e.approx = to_complex(cand);
    e.algebraic_multiplicity = 0;
    UniPoly factor = UniPoly::linear_root(cand);
    while (true) {
      auto [q, r] = remaining.divmod(factor);
      if (!r.is_zero()) break;
      remaining = q;
      ++e.algebraic_multiplicity;
    }
    fill_exact_eigendata(e, rm.matrix);
    rep.eigenvalues.push_back(std::move(e));
  }

  if (remaining.degree() == 1) {
    // Monic-up-to-scale linear remainder: its root is exact.
    Eigenvalue e;
    e.kind = Eigenvalue::Kind::exact;
    e.value = -(remaining.coeff(0) / remaining.coeff(1));
    e.approx = to_complex(e.value);
    e.algebraic_multiplicity = 1;
    fill_exact_eigendata(e, rm.matrix);
    rep.eigenvalues.push_back(std::move(e));
    remaining = UniPoly::constant(remaining.leading());
  } else if (remaining.degree() == 2) {
    GaussianRational lead_inv = remaining.leading().inverse();
    QuadraticFactor qf{remaining.coeff(1) * lead_inv, remaining.coeff(0) * lead_inv};
    std::complex<double> b = to_complex(qf.b), c = to_complex(qf.c);
    std::complex<double> disc = std::sqrt(b * b - 4.0 * c);
    rep.quadratics.push_back(qf);
    for (int sign : {+1, -1}) {
      Eigenvalue e;
      e.kind = Eigenvalue::Kind::quadratic;
      e.approx = (-b + (double)sign * disc) / 2.0;
      e.quadratic_index = static_cast<int>(rep.quadratics.size()) - 1;
      e.residual = std::abs(rep.characteristic.evaluate(e.approx));
      rep.eigenvalues.push_back(std::move(e));
    }
    remaining = UniPoly::constant(remaining.leading());
  } else if (remaining.degree() >= 3) {
    std::vector<std::complex<double>> rcoeffs;
    for (const auto& c : remaining.coeffs()) rcoeffs.push_back(to_complex(c));
    for (const auto& r : durand_kerner_roots(rcoeffs)) {
      Eigenvalue e;
      e.kind = Eigenvalue::Kind::approximate;
      e.approx = r;
      e.residual = std::abs(rep.characteristic.evaluate(r));
      rep.eigenvalues.push_back(std::move(e));
    }
    remaining = UniPoly::constant(remaining.leading());
  }
  return rep;
}

NormalForm landau_hamiltonian() {
  NormalForm nf(1);
  nf.set_term({{1}, {1}}, GaussianRational(1));
  return nf;
}

NormalForm modified_landau(const GaussianRational& alpha, const GaussianRational& beta) {
  NormalForm nf(1);
  nf.set_term({{1}, {1}}, GaussianRational(1));
  nf.set_term({{2}, {1}}, alpha);
  nf.set_term({{1}, {0}}, -alpha);
  nf.set_term({{0}, {1}}, beta);
  return nf;
}

std::vector<std::vector<GaussianRational>> eigenfunctions(const RestrictedMatrix& rm,
                                                          const GaussianRational& lambda) {
  ExactMatrix shifted = rm.matrix - ExactMatrix::identity(rm.k).scaled(lambda);
  auto basis = nullspace(shifted);
  if (basis.empty())
    throw std::domain_error("eigenfunctions: " + lambda.to_string() + " is not an eigenvalue");
  return basis;
}

}  // namespace pfx
