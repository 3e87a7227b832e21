#include "polyfock/univariate.hpp"

#include <cmath>
#include <sstream>

namespace pfx {

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational UniPoly::leading() const {
  if (is_zero()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const GaussianRational& s) const {
  UniPoly r = *this;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  UniPoly rem = *this;
  std::vector<GaussianRational> q;
  int dd = divisor.degree();
  if (rem.degree() >= dd) q.resize(rem.degree() - dd + 1);
  GaussianRational lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    GaussianRational f = rem.leading() * lead_inv;
    q[shift] = f;
    std::vector<GaussianRational> sub(shift + divisor.c_.size());
    for (size_t i = 0; i < divisor.c_.size(); ++i) sub[shift + i] = divisor.c_[i] * f;
    rem = rem - UniPoly(std::move(sub));
  }
  return {UniPoly(std::move(q)), std::move(rem)};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::domain_error("UniPoly: division is not exact");
  return q;
}

GaussianRational UniPoly::evaluate(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> UniPoly::evaluate(const std::complex<double>& x) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + std::complex<double>(it->re.to_double(), it->im.to_double());
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].to_string();
    if (i >= 1) os << " " << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<std::complex<double>> durand_kerner_roots(
    const std::vector<std::complex<double>>& coeffs_ascending) {
  std::vector<std::complex<double>> c = coeffs_ascending;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  const size_t n = c.size() - 1;
  std::complex<double> lead = c.back();
  for (auto& x : c) x /= lead;
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  std::vector<std::complex<double>> roots(n);
  std::complex<double> seed(0.4, 0.9);  // standard non-real seed
  std::complex<double> w = 1.0;
  for (size_t i = 0; i < n; ++i) {
    roots[i] = w;
    w *= seed;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0.0;
    for (size_t i = 0; i < n; ++i) {
      std::complex<double> denom = 1.0;
      for (size_t j = 0; j < n; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      std::complex<double> delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  return roots;
}

Rational rationalize(double x, long long max_den) {
  if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite input");
  bool neg = x < 0;
  double v = std::fabs(x);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int i = 0; i < 64; ++i) {
    double ip = std::floor(frac);
    if (ip > 9e17) break;
    long long a = static_cast<long long>(ip);
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    if (q2 > max_den || p2 < 0 || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - ip;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  return neg ? -r : r;
}

}  // namespace pfx
