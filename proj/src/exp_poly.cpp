#include "polyfock/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pfx {

unsigned MultiMonomial::total_degree() const {
  unsigned t = 0;
  for (unsigned e : zexp) t += e;
  for (unsigned e : zbexp) t += e;
  return t;
}

bool operator<(const MultiMonomial& a, const MultiMonomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  if (a.zexp != b.zexp) return a.zexp < b.zexp;
  return a.zbexp < b.zbexp;
}

GaussianRational gr_pow(const GaussianRational& x, unsigned n) {
  GaussianRational r(1);
  for (unsigned i = 0; i < n; ++i) r *= x;
  return r;
}

ExpPoly::ExpPoly(unsigned dims)
    : dims_(dims), u_(dims, GaussianRational()), v_(dims, GaussianRational()) {
  if (dims == 0) throw std::domain_error("ExpPoly: dims must be >= 1");
}

ExpPoly ExpPoly::constant(unsigned dims, GaussianRational c) {
  ExpPoly p(dims);
  p.set_term({std::vector<unsigned>(dims, 0), std::vector<unsigned>(dims, 0)}, std::move(c));
  return p;
}

ExpPoly ExpPoly::monomial(unsigned dims, std::vector<unsigned> zexp, std::vector<unsigned> zbexp,
                          GaussianRational c) {
  if (zexp.size() != dims || zbexp.size() != dims)
    throw std::domain_error("ExpPoly: monomial exponent length != dims");
  ExpPoly p(dims);
  p.set_term({std::move(zexp), std::move(zbexp)}, std::move(c));
  return p;
}

ExpPoly ExpPoly::z(unsigned dims, unsigned j) {
  std::vector<unsigned> e(dims, 0);
  e.at(j - 1) = 1;
  return monomial(dims, e, std::vector<unsigned>(dims, 0));
}

ExpPoly ExpPoly::zbar(unsigned dims, unsigned j) {
  std::vector<unsigned> e(dims, 0);
  e.at(j - 1) = 1;
  return monomial(dims, std::vector<unsigned>(dims, 0), e);
}

bool ExpPoly::is_polynomial() const {
  if (!shift_.is_zero()) return false;
  for (const auto& c : u_)
    if (!c.is_zero()) return false;
  for (const auto& c : v_)
    if (!c.is_zero()) return false;
  return true;
}

bool ExpPoly::is_analytic() const {
  for (const auto& c : v_)
    if (!c.is_zero()) return false;
  for (const auto& [m, c] : terms_)
    for (unsigned e : m.zbexp)
      if (e != 0) return false;
  return true;
}

unsigned ExpPoly::max_zbar_degree(unsigned j) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.zbexp.at(j - 1));
  return d;
}

unsigned ExpPoly::max_total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void ExpPoly::set_term(MultiMonomial m, GaussianRational c) {
  if (m.zexp.size() != dims_ || m.zbexp.size() != dims_)
    throw std::domain_error("ExpPoly: monomial exponent length != dims");
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[std::move(m)] = std::move(c);
  canonicalize();
}

void ExpPoly::set_exp_u(std::vector<GaussianRational> u) {
  if (u.size() != dims_) throw std::domain_error("ExpPoly: exponent vector length != dims");
  u_ = std::move(u);
  canonicalize();
}

void ExpPoly::set_exp_v(std::vector<GaussianRational> v) {
  if (v.size() != dims_) throw std::domain_error("ExpPoly: exponent vector length != dims");
  v_ = std::move(v);
  canonicalize();
}

void ExpPoly::set_exp_shift(GaussianRational s) {
  shift_ = std::move(s);
  canonicalize();
}

void ExpPoly::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  if (terms_.empty()) {
    shift_ = GaussianRational();
    std::fill(u_.begin(), u_.end(), GaussianRational());
    std::fill(v_.begin(), v_.end(), GaussianRational());
  }
}

void ExpPoly::require_same_exp(const ExpPoly& o) const {
  if (dims_ != o.dims_) throw std::domain_error("ExpPoly: dimension mismatch");
  if (shift_ != o.shift_ || u_ != o.u_ || v_ != o.v_)
    throw std::domain_error("ExpPoly: incommensurable exponential factors in addition");
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  if (a.dims_ != b.dims_) throw std::domain_error("ExpPoly: dimension mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  a.require_same_exp(b);
  ExpPoly r = a;
  for (const auto& [m, c] : b.terms_) {
    auto it = r.terms_.find(m);
    if (it == r.terms_.end()) {
      r.terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  r.canonicalize();
  return r;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  if (a.dims_ != b.dims_) throw std::domain_error("ExpPoly: dimension mismatch");
  ExpPoly r(a.dims_);
  if (a.is_zero() || b.is_zero()) return r;
  r.shift_ = a.shift_ + b.shift_;
  for (unsigned j = 0; j < a.dims_; ++j) {
    r.u_[j] = a.u_[j] + b.u_[j];
    r.v_[j] = a.v_[j] + b.v_[j];
  }
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      MultiMonomial m = ma;
      for (unsigned j = 0; j < a.dims_; ++j) {
        m.zexp[j] += mb.zexp[j];
        m.zbexp[j] += mb.zbexp[j];
      }
      GaussianRational c = ca * cb;
      auto it = r.terms_.find(m);
      if (it == r.terms_.end())
        r.terms_.emplace(std::move(m), std::move(c));
      else
        it->second += c;
    }
  }
  r.canonicalize();
  return r;
}

ExpPoly ExpPoly::scaled(const GaussianRational& c) const {
  ExpPoly r(dims_);
  if (c.is_zero() || is_zero()) return r;
  r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

ExpPoly ExpPoly::scaled(const ExpScalar& c) const {
  ExpPoly r = scaled(c.coeff());
  if (!r.is_zero()) r.shift_ += c.exponent();
  return r;
}

bool operator==(const ExpPoly& a, const ExpPoly& b) {
  return a.dims_ == b.dims_ && a.shift_ == b.shift_ && a.u_ == b.u_ && a.v_ == b.v_ &&
         a.terms_ == b.terms_;
}

ExpPoly ExpPoly::conjugate() const {
  ExpPoly r(dims_);
  r.shift_ = shift_.conj();
  for (unsigned j = 0; j < dims_; ++j) {
    r.u_[j] = v_[j].conj();
    r.v_[j] = u_[j].conj();
  }
  for (const auto& [m, c] : terms_) r.terms_[{m.zbexp, m.zexp}] = c.conj();
  r.canonicalize();
  return r;
}

ExpPoly ExpPoly::apply_lowering(unsigned j) const {
  if (j < 1 || j > dims_) throw std::domain_error("ExpPoly: coordinate out of range");
  unsigned idx = j - 1;
  ExpPoly r(dims_);
  if (is_zero()) return r;
  r.shift_ = shift_;
  r.u_ = u_;
  r.v_ = v_;
  for (const auto& [m, c] : terms_) {
    if (m.zbexp[idx] > 0) {
      MultiMonomial dm = m;
      dm.zbexp[idx] -= 1;
      GaussianRational dc = c * GaussianRational(Rational((long long)m.zbexp[idx]));
      auto it = r.terms_.find(dm);
      if (it == r.terms_.end())
        r.terms_.emplace(std::move(dm), std::move(dc));
      else
        it->second += dc;
    }
    if (!v_[idx].is_zero()) {
      GaussianRational vc = c * v_[idx];
      auto it = r.terms_.find(m);
      if (it == r.terms_.end())
        r.terms_.emplace(m, std::move(vc));
      else
        it->second += vc;
    }
  }
  r.canonicalize();
  return r;
}

ExpPoly ExpPoly::deriv_z(unsigned j) const {
  if (j < 1 || j > dims_) throw std::domain_error("ExpPoly: coordinate out of range");
  unsigned idx = j - 1;
  ExpPoly r(dims_);
  if (is_zero()) return r;
  r.shift_ = shift_;
  r.u_ = u_;
  r.v_ = v_;
  for (const auto& [m, c] : terms_) {
    if (m.zexp[idx] > 0) {
      MultiMonomial dm = m;
      dm.zexp[idx] -= 1;
      GaussianRational dc = c * GaussianRational(Rational((long long)m.zexp[idx]));
      auto it = r.terms_.find(dm);
      if (it == r.terms_.end())
        r.terms_.emplace(std::move(dm), std::move(dc));
      else
        it->second += dc;
    }
    if (!u_[idx].is_zero()) {
      GaussianRational uc = c * u_[idx];
      auto it = r.terms_.find(m);
      if (it == r.terms_.end())
        r.terms_.emplace(m, std::move(uc));
      else
        it->second += uc;
    }
  }
  r.canonicalize();
  return r;
}

ExpPoly ExpPoly::apply_raising(unsigned j) const {
  if (j < 1 || j > dims_) throw std::domain_error("ExpPoly: coordinate out of range");
  // zbar_j * f shares f's exponential data, so build it term-by-term.
  ExpPoly prod(dims_);
  prod.shift_ = shift_;
  prod.u_ = u_;
  prod.v_ = v_;
  for (const auto& [m, c] : terms_) {
    MultiMonomial mm = m;
    mm.zbexp[j - 1] += 1;
    prod.terms_.emplace(std::move(mm), c);
  }
  prod.canonicalize();
  return prod - deriv_z(j);
}

ExpPoly ExpPoly::rotate(const std::vector<std::vector<GaussianRational>>& U) const {
  const unsigned d = dims_;
  if (U.size() != d) throw std::domain_error("ExpPoly: rotation matrix size != dims");
  for (const auto& row : U)
    if (row.size() != d) throw std::domain_error("ExpPoly: rotation matrix size != dims");
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j) {
      GaussianRational s;
      for (unsigned k = 0; k < d; ++k) s += U[k][i].conj() * U[k][j];
      if (s != GaussianRational(i == j ? 1 : 0))
        throw std::domain_error("ExpPoly: rotation matrix not exactly unitary");
    }
  }
  if (is_zero()) return *this;
  // V = U^{-1} = U^dagger; substitute z_i -> (Vz)_i, zbar_i -> conj(V)zbar.
  std::vector<ExpPoly> lin(d, ExpPoly(d)), linbar(d, ExpPoly(d));
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j) {
      GaussianRational vij = U[j][i].conj();
      lin[i] = lin[i] + ExpPoly::z(d, j + 1).scaled(vij);
      linbar[i] = linbar[i] + ExpPoly::zbar(d, j + 1).scaled(vij.conj());
    }
  }
  ExpPoly result(d);
  for (const auto& [m, c] : terms_) {
    ExpPoly t = ExpPoly::constant(d, c);
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned e = 0; e < m.zexp[i]; ++e) t = t * lin[i];
      for (unsigned e = 0; e < m.zbexp[i]; ++e) t = t * linbar[i];
    }
    result = result + t;
  }
  std::vector<GaussianRational> nu(d), nv(d);
  for (unsigned j = 0; j < d; ++j) {
    for (unsigned i = 0; i < d; ++i) {
      GaussianRational vij = U[j][i].conj();
      nu[j] += vij * u_[i];
      nv[j] += vij.conj() * v_[i];
    }
  }
  ExpPoly expo(d);
  expo.set_term({std::vector<unsigned>(d, 0), std::vector<unsigned>(d, 0)}, GaussianRational(1));
  expo.u_ = std::move(nu);
  expo.v_ = std::move(nv);
  expo.shift_ = shift_;
  return result * expo;
}

ExpPoly ExpPoly::weyl_shift(const std::vector<GaussianRational>& a, bool include_gauge) const {
  const unsigned d = dims_;
  if (a.size() != d) throw std::domain_error("ExpPoly: shift vector length != dims");
  if (is_zero()) return *this;
  // Substitute z_j -> z_j - a_j, zbar_j -> zbar_j - conj(a_j).
  std::vector<ExpPoly> zs(d, ExpPoly(d)), zbs(d, ExpPoly(d));
  for (unsigned j = 0; j < d; ++j) {
    zs[j] = ExpPoly::z(d, j + 1) + ExpPoly::constant(d, -a[j]);
    zbs[j] = ExpPoly::zbar(d, j + 1) + ExpPoly::constant(d, -a[j].conj());
  }
  ExpPoly result(d);
  for (const auto& [m, c] : terms_) {
    ExpPoly t = ExpPoly::constant(d, c);
    for (unsigned j = 0; j < d; ++j) {
      for (unsigned e = 0; e < m.zexp[j]; ++e) t = t * zs[j];
      for (unsigned e = 0; e < m.zbexp[j]; ++e) t = t * zbs[j];
    }
    result = result + t;
  }
  // e^{u.(z-a) + v.(zbar - conj(a))} = e^{-u.a - v.conj(a)} e^{u.z + v.zbar},
  // then the gauge multiplies by e^{conj(a).z} and optionally e^{-|a|^2/2}.
  GaussianRational s = shift_;
  std::vector<GaussianRational> nu = u_;
  Rational half(1, 2);
  for (unsigned j = 0; j < d; ++j) {
    s -= u_[j] * a[j];
    s -= v_[j] * a[j].conj();
    nu[j] += a[j].conj();
    if (include_gauge) s -= GaussianRational(a[j].abs_sq() * half);
  }
  ExpPoly expo(d);
  expo.set_term({std::vector<unsigned>(d, 0), std::vector<unsigned>(d, 0)}, GaussianRational(1));
  expo.u_ = std::move(nu);
  expo.v_ = v_;
  expo.shift_ = std::move(s);
  return result * expo;
}

std::complex<double> ExpPoly::evaluate(const std::vector<std::complex<double>>& point) const {
  if (point.size() != dims_) throw std::domain_error("ExpPoly: evaluation point length != dims");
  auto cval = [](const GaussianRational& g) {
    return std::complex<double>(g.re.to_double(), g.im.to_double());
  };
  std::complex<double> expo = cval(shift_);
  for (unsigned j = 0; j < dims_; ++j)
    expo += cval(u_[j]) * point[j] + cval(v_[j]) * std::conj(point[j]);
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = cval(c);
    for (unsigned j = 0; j < dims_; ++j) {
      for (unsigned e = 0; e < m.zexp[j]; ++e) t *= point[j];
      for (unsigned e = 0; e < m.zbexp[j]; ++e) t *= std::conj(point[j]);
    }
    sum += t;
  }
  return sum * std::exp(expo);
}

std::string ExpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (unsigned j = 0; j < dims_; ++j) {
      if (m.zexp[j]) {
        os << " z" << (dims_ > 1 ? std::to_string(j + 1) : "");
        if (m.zexp[j] > 1) os << "^" << m.zexp[j];
      }
      if (m.zbexp[j]) {
        os << " zb" << (dims_ > 1 ? std::to_string(j + 1) : "");
        if (m.zbexp[j] > 1) os << "^" << m.zbexp[j];
      }
    }
  }
  bool expo = !shift_.is_zero();
  for (unsigned j = 0; j < dims_ && !expo; ++j) expo = !u_[j].is_zero() || !v_[j].is_zero();
  if (expo) {
    os << " * exp{" << shift_.to_string();
    for (unsigned j = 0; j < dims_; ++j) {
      if (!u_[j].is_zero()) os << " + " << u_[j].to_string() << " z" << (dims_ > 1 ? std::to_string(j + 1) : "");
      if (!v_[j].is_zero()) os << " + " << v_[j].to_string() << " zb" << (dims_ > 1 ? std::to_string(j + 1) : "");
    }
    os << "}";
  }
  return os.str();
}

namespace {

/// integral z^p zbar^q e^{s z + t zbar} dmu(z) = e^{st} * M(p, q, s, t) with
/// M = sum_j C(p,j) C(q,j) j! s^{q-j} t^{p-j}; this returns M.
GaussianRational moment_coeff(unsigned p, unsigned q, const GaussianRational& s,
                              const GaussianRational& t) {
  GaussianRational total;
  unsigned jmax = std::min(p, q);
  for (unsigned j = 0; j <= jmax; ++j) {
    if (q > j && s.is_zero()) continue;
    if (p > j && t.is_zero()) continue;
    GaussianRational c(Rational(binomial(p, j) * binomial(q, j) * factorial(j)));
    total += c * gr_pow(s, q - j) * gr_pow(t, p - j);
  }
  return total;
}

}  // namespace

ExpScalar inner_product(const ExpPoly& f, const ExpPoly& g) {
  if (f.dims() != g.dims()) throw std::domain_error("inner_product: dimension mismatch");
  ExpPoly h = f * g.conjugate();
  if (h.is_zero()) return ExpScalar::zero();
  const auto& u = h.exp_u();
  const auto& v = h.exp_v();
  GaussianRational coeff;
  for (const auto& [m, c] : h.terms()) {
    GaussianRational t = c;
    for (unsigned j = 0; j < h.dims() && !t.is_zero(); ++j)
      t *= moment_coeff(m.zexp[j], m.zbexp[j], u[j], v[j]);
    coeff += t;
  }
  GaussianRational expo = h.exp_shift();
  for (unsigned j = 0; j < h.dims(); ++j) expo += u[j] * v[j];
  return ExpScalar(std::move(coeff), std::move(expo));
}

ExpScalar norm_sq(const ExpPoly& f) { return inner_product(f, f); }

}  // namespace pfx
