#include "polyfock/kernels.hpp"

#include "polyfock/decomposition.hpp"

namespace pfx {

bool operator<(const KernelMonomial& x, const KernelMonomial& y) {
  unsigned dx = x.zeta + x.zetabar + x.z + x.zbar;
  unsigned dy = y.zeta + y.zetabar + y.z + y.zbar;
  if (dx != dy) return dx < dy;
  if (x.zeta != y.zeta) return x.zeta < y.zeta;
  if (x.zetabar != y.zetabar) return x.zetabar < y.zetabar;
  if (x.z != y.z) return x.z < y.z;
  return x.zbar < y.zbar;
}

namespace {

using KTerms = std::map<KernelMonomial, GaussianRational>;

void add_term(KTerms& t, KernelMonomial m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

KTerms mul(const KTerms& a, const KTerms& b) {
  KTerms r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      add_term(r, {ma.zeta + mb.zeta, ma.zetabar + mb.zetabar, ma.z + mb.z, ma.zbar + mb.zbar},
               ca * cb);
  return r;
}

/// P -> z P - d/dzbar P - zeta P (action of (z - d/dzbar) through e^{zeta zbar}).
KTerms apply_z_side(const KTerms& p) {
  KTerms r;
  for (const auto& [m, c] : p) {
    add_term(r, {m.zeta, m.zetabar, m.z + 1, m.zbar}, c);
    if (m.zbar > 0)
      add_term(r, {m.zeta, m.zetabar, m.z, m.zbar - 1},
               -(c * GaussianRational(Rational((long long)m.zbar))));
    add_term(r, {m.zeta + 1, m.zetabar, m.z, m.zbar}, -c);
  }
  return r;
}

/// P -> zetabar P - d/dzeta P - zbar P (action of (zetabar - d/dzeta)).
KTerms apply_zeta_side(const KTerms& p) {
  KTerms r;
  for (const auto& [m, c] : p) {
    add_term(r, {m.zeta, m.zetabar + 1, m.z, m.zbar}, c);
    if (m.zeta > 0)
      add_term(r, {m.zeta - 1, m.zetabar, m.z, m.zbar},
               -(c * GaussianRational(Rational((long long)m.zeta))));
    add_term(r, {m.zeta, m.zetabar, m.z, m.zbar + 1}, -c);
  }
  return r;
}

}  // namespace

KernelFunc true_kernel(unsigned k) {
  if (k < 1) throw std::domain_error("true_kernel: k must be >= 1");
  KTerms p;
  p[{0, 0, 0, 0}] = GaussianRational(1);
  for (unsigned i = 1; i < k; ++i) p = apply_z_side(p);
  for (unsigned i = 1; i < k; ++i) p = apply_zeta_side(p);
  GaussianRational inv(rational_factorial(k - 1).inverse());
  KernelFunc kf;
  kf.level = k;
  for (auto& [m, c] : p) kf.terms[m] = c * inv;
  return kf;
}

UniPoly kernel_factor_check(unsigned k) {
  KernelFunc kf = true_kernel(k);
  // lambda = (z - zeta)(zetabar - zbar)
  KTerms lambda;
  add_term(lambda, {0, 1, 1, 0}, GaussianRational(1));   // z zetabar
  add_term(lambda, {0, 0, 1, 1}, GaussianRational(-1));  // -z zbar
  add_term(lambda, {1, 1, 0, 0}, GaussianRational(-1));  // -zeta zetabar
  add_term(lambda, {1, 0, 0, 1}, GaussianRational(1));   // zeta zbar

  KTerms rest = kf.terms;
  std::vector<GaussianRational> coeffs(k);
  KTerms lambda_pow;
  lambda_pow[{0, 0, 0, 0}] = GaussianRational(1);
  std::vector<KTerms> powers{lambda_pow};
  for (unsigned i = 1; i < k; ++i) powers.push_back(mul(powers.back(), lambda));
  for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
    // Only lambda^i produces the monomial zeta^i zetabar^i, with sign (-1)^i.
    KernelMonomial probe{static_cast<unsigned>(i), static_cast<unsigned>(i), 0, 0};
    GaussianRational c;
    auto it = rest.find(probe);
    if (it != rest.end()) c = it->second;
    if (i % 2 == 1) c = -c;
    coeffs[i] = c;
    for (const auto& [m, pc] : powers[i]) add_term(rest, m, -(pc * c));
  }
  if (!rest.empty())
    throw std::logic_error("kernel_factor_check: kernel does not factor through lambda");
  for (const auto& c : coeffs)
    if (!c.is_real())
      throw std::logic_error("kernel_factor_check: factored coefficients are not real");
  return UniPoly(std::move(coeffs));
}

namespace {

/// Projects coordinate `coord` of a polynomial onto the true level-k space
/// by symbolic integration against the reproducing kernel: the moment
/// integral of zeta^p zetabar^q e^{zetabar z} is (p!/(p-q)!) z^{p-q} for
/// p >= q and zero otherwise.
ExpPoly project_coordinate(const ExpPoly& f, unsigned coord, unsigned k) {
  if (!f.is_polynomial()) throw std::domain_error("project: non-polynomial input");
  if (coord < 1 || coord > f.dims()) throw std::domain_error("project: coordinate out of range");
  KernelFunc q = true_kernel(k);
  const unsigned idx = coord - 1;
  ExpPoly out(f.dims());
  for (const auto& [km, kc] : q.terms) {
    GaussianRational kbar = kc.conj();
    for (const auto& [fm, fc] : f.terms()) {
      unsigned p = fm.zexp[idx] + km.zetabar;
      unsigned qq = fm.zbexp[idx] + km.zeta;
      if (p < qq) continue;
      GaussianRational c = kbar * fc * GaussianRational(Rational(falling_factorial(p, qq)));
      MultiMonomial m = fm;
      m.zexp[idx] = km.zbar + (p - qq);
      m.zbexp[idx] = km.z;
      ExpPoly t(f.dims());
      t.set_term(std::move(m), std::move(c));
      out = out + t;
    }
  }
  return out;
}

}  // namespace

ExpPoly project_true(const ExpPoly& f, unsigned k, ProjectionMethod method) {
  if (f.dims() != 1) throw std::domain_error("project_true: d = 1 only");
  if (k < 1) throw std::domain_error("project_true: k must be >= 1");
  if (method == ProjectionMethod::gram) {
    if (!f.is_polynomial()) throw std::domain_error("project: non-polynomial input");
    return true_decompose(f).component({k});
  }
  return project_coordinate(f, 1, k);
}

ExpPoly tensor_project(const ExpPoly& f, const std::vector<unsigned>& level,
                       ProjectionMethod method) {
  if (level.size() != f.dims())
    throw std::domain_error("tensor_project: level index length != dims");
  for (unsigned kj : level)
    if (kj < 1) throw std::domain_error("tensor_project: levels must be >= 1");
  if (method == ProjectionMethod::gram) {
    if (!f.is_polynomial()) throw std::domain_error("project: non-polynomial input");
    return multi_true_decompose(f).component(level);
  }
  ExpPoly r = f;
  for (unsigned j = 0; j < level.size(); ++j) r = project_coordinate(r, j + 1, level[j]);
  return r;
}

}  // namespace pfx
