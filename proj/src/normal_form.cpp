#include "polyfock/normal_form.hpp"

#include <algorithm>
#include <sstream>

namespace pfx {

unsigned WordKey::total_degree() const {
  unsigned t = 0;
  for (unsigned e : adag) t += e;
  for (unsigned e : a) t += e;
  return t;
}

bool operator<(const WordKey& x, const WordKey& y) {
  unsigned dx = x.total_degree(), dy = y.total_degree();
  if (dx != dy) return dx < dy;
  if (x.adag != y.adag) return x.adag < y.adag;
  return x.a < y.a;
}

NormalForm::NormalForm(unsigned dims) : dims_(dims) {
  if (dims == 0) throw std::domain_error("NormalForm: dims must be >= 1");
}

NormalForm NormalForm::identity(unsigned dims) {
  return scalar(GaussianRational(1), dims);
}

NormalForm NormalForm::scalar(GaussianRational c, unsigned dims) {
  NormalForm nf(dims);
  nf.set_term({std::vector<unsigned>(dims, 0), std::vector<unsigned>(dims, 0)}, std::move(c));
  return nf;
}

NormalForm NormalForm::lowering(unsigned dims, unsigned j) {
  if (j < 1 || j > dims) throw std::domain_error("NormalForm: coordinate out of range");
  std::vector<unsigned> q(dims, 0);
  q[j - 1] = 1;
  NormalForm nf(dims);
  nf.set_term({std::vector<unsigned>(dims, 0), std::move(q)}, GaussianRational(1));
  return nf;
}

NormalForm NormalForm::raising(unsigned dims, unsigned j) {
  if (j < 1 || j > dims) throw std::domain_error("NormalForm: coordinate out of range");
  std::vector<unsigned> p(dims, 0);
  p[j - 1] = 1;
  NormalForm nf(dims);
  nf.set_term({std::move(p), std::vector<unsigned>(dims, 0)}, GaussianRational(1));
  return nf;
}

void NormalForm::set_term(WordKey k, GaussianRational c) {
  if (k.adag.size() != dims_ || k.a.size() != dims_)
    throw std::domain_error("NormalForm: word exponent length != dims");
  if (c.is_zero())
    terms_.erase(k);
  else
    terms_[std::move(k)] = std::move(c);
}

void NormalForm::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

NormalForm NormalForm::operator-() const {
  NormalForm r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

NormalForm operator+(const NormalForm& x, const NormalForm& y) {
  if (x.dims_ != y.dims_) throw std::domain_error("NormalForm: dimension mismatch");
  NormalForm r = x;
  for (const auto& [k, c] : y.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end())
      r.terms_.emplace(k, c);
    else
      it->second += c;
  }
  r.prune();
  return r;
}

NormalForm operator-(const NormalForm& x, const NormalForm& y) { return x + (-y); }

NormalForm NormalForm::scaled(const GaussianRational& c) const {
  NormalForm r(dims_);
  if (c.is_zero()) return r;
  r = *this;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

std::string NormalForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (unsigned j = 0; j < dims_; ++j) {
      if (k.adag[j]) {
        os << " ad" << (dims_ > 1 ? "_" + std::to_string(j + 1) : "");
        if (k.adag[j] > 1) os << "^" << k.adag[j];
      }
    }
    for (unsigned j = 0; j < dims_; ++j) {
      if (k.a[j]) {
        os << " a" << (dims_ > 1 ? "_" + std::to_string(j + 1) : "");
        if (k.a[j] > 1) os << "^" << k.a[j];
      }
    }
  }
  return os.str();
}

NormalForm compose(const NormalForm& x, const NormalForm& y) {
  if (x.dims() != y.dims()) throw std::domain_error("NormalForm: dimension mismatch");
  const unsigned d = x.dims();
  NormalForm r(d);
  // (adag)^{p1} a^{q1} (adag)^{p2} a^{q2}: reorder a^{q1}(adag)^{p2}
  // coordinate-wise with the double-binomial rule.
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      std::vector<unsigned> jmax(d);
      for (unsigned j = 0; j < d; ++j) jmax[j] = std::min(kx.a[j], ky.adag[j]);
      std::vector<unsigned> idx(d, 0);
      while (true) {
        Rational coef(1);
        for (unsigned j = 0; j < d; ++j) {
          unsigned i = idx[j];
          if (i)
            coef *= Rational(binomial(kx.a[j], i) * binomial(ky.adag[j], i) * factorial(i));
        }
        WordKey k;
        k.adag.resize(d);
        k.a.resize(d);
        for (unsigned j = 0; j < d; ++j) {
          k.adag[j] = kx.adag[j] + ky.adag[j] - idx[j];
          k.a[j] = kx.a[j] + ky.a[j] - idx[j];
        }
        GaussianRational c = cx * cy * GaussianRational(coef);
        auto it = r.terms().find(k);
        if (it == r.terms().end())
          r.set_term(std::move(k), std::move(c));
        else
          r.set_term(k, it->second + c);
        // advance the contraction multi-index
        unsigned j = 0;
        while (j < d && idx[j] == jmax[j]) {
          idx[j] = 0;
          ++j;
        }
        if (j == d) break;
        ++idx[j];
      }
    }
  }
  return r;
}

NormalForm commutator(const NormalForm& x, const NormalForm& y) {
  return compose(x, y) - compose(y, x);
}

NormalForm normal_order(const OperatorWord& w) {
  NormalForm acc = NormalForm::scalar(w.scalar, w.dims);
  for (const auto& letter : w.letters) {
    NormalForm nf = letter.raising ? NormalForm::raising(w.dims, letter.coord)
                                   : NormalForm::lowering(w.dims, letter.coord);
    acc = compose(acc, nf);
  }
  return acc;
}

Sl2Triple sl2_generators(const Rational& k) {
  GaussianRational km1(k - Rational(1));
  NormalForm jp(1), j0(1), jm(1);
  jp.set_term({{2}, {1}}, GaussianRational(1));
  jp.set_term({{1}, {0}}, -km1);
  j0.set_term({{1}, {1}}, GaussianRational(1));
  j0.set_term({{0}, {0}}, -GaussianRational(km1.re / Rational(2)));
  jm.set_term({{0}, {1}}, GaussianRational(1));
  return {std::move(jp), std::move(j0), std::move(jm)};
}

NormalForm euler_cartan(unsigned m, unsigned dims, unsigned coord) {
  if (coord < 1 || coord > dims) throw std::domain_error("euler_cartan: coordinate out of range");
  NormalForm nf(dims);
  std::vector<unsigned> e(dims, 0);
  e[coord - 1] = 1;
  nf.set_term({e, e}, GaussianRational(1));
  if (m > 0)
    nf.set_term({std::vector<unsigned>(dims, 0), std::vector<unsigned>(dims, 0)},
                GaussianRational(-Rational((long long)m)));
  return nf;
}

NormalForm number_operator(unsigned dims) {
  NormalForm nf(dims);
  for (unsigned j = 0; j < dims; ++j) {
    std::vector<unsigned> e(dims, 0);
    e[j] = 1;
    nf.set_term({e, e}, GaussianRational(1));
  }
  return nf;
}

SldFamily sld_generators(unsigned d, const Rational& k) {
  if (d < 1) throw std::domain_error("sld_generators: d must be >= 1");
  SldFamily fam;
  fam.dims = d;
  fam.k = k;
  NormalForm num = number_operator(d);
  NormalForm num_minus_k = num - NormalForm::scalar(GaussianRational(k), d);
  for (unsigned i = 1; i <= d; ++i) fam.lowering.push_back(NormalForm::lowering(d, i));
  fam.neutral.resize(d);
  for (unsigned i = 1; i <= d; ++i)
    for (unsigned j = 1; j <= d; ++j)
      fam.neutral[i - 1].push_back(compose(NormalForm::raising(d, i), NormalForm::lowering(d, j)));
  for (unsigned i = 1; i <= d; ++i)
    fam.raising.push_back(compose(NormalForm::raising(d, i), num_minus_k));
  return fam;
}

ExpPoly apply(const NormalForm& x, const ExpPoly& f) {
  if (x.dims() != f.dims()) throw std::domain_error("apply: dimension mismatch");
  ExpPoly result(f.dims());
  for (const auto& [k, c] : x.terms()) {
    ExpPoly t = f;
    for (unsigned j = 0; j < x.dims(); ++j)
      for (unsigned e = 0; e < k.a[j]; ++e) t = t.apply_lowering(j + 1);
    for (unsigned j = 0; j < x.dims(); ++j)
      for (unsigned e = 0; e < k.adag[j]; ++e) t = t.apply_raising(j + 1);
    result = result + t.scaled(c);
  }
  return result;
}

}  // namespace pfx
