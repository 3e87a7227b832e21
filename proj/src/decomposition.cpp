#include "polyfock/decomposition.hpp"

#include <algorithm>

namespace pfx {

ExpPoly TrueLevelDecomposition::component(const std::vector<unsigned>& index) const {
  auto it = components.find(index);
  return it == components.end() ? ExpPoly::zero(dims) : it->second;
}

ExpPoly TrueLevelDecomposition::sum() const {
  ExpPoly total(dims);
  for (const auto& [idx, comp] : components) total = total + comp;
  return total;
}

namespace {

void require_no_zbar_exponential(const ExpPoly& f) {
  for (const auto& c : f.exp_v())
    if (!c.is_zero())
      throw std::domain_error("membership: not poly-analytic of finite order (zbar exponential factor)");
}

void require_polynomial(const ExpPoly& f, const char* who) {
  if (!f.is_polynomial()) throw std::domain_error(std::string(who) + ": non-polynomial input");
}

void require_analytic(const ExpPoly& g, const char* who) {
  if (!g.is_analytic()) throw std::domain_error(std::string(who) + ": input is not analytic");
}

}  // namespace

unsigned membership_level(const ExpPoly& f) {
  if (f.dims() != 1) throw std::domain_error("membership_level: d = 1 only");
  require_no_zbar_exponential(f);
  if (f.is_zero()) return 1;
  return f.max_zbar_degree(1) + 1;
}

bool euler_cartan_membership(const ExpPoly& f, unsigned k) {
  if (f.dims() != 1) throw std::domain_error("euler_cartan_membership: d = 1 only");
  if (k < 1) throw std::domain_error("euler_cartan_membership: k must be >= 1");
  require_no_zbar_exponential(f);
  ExpPoly t = f;
  for (unsigned m = 0; m < k; ++m) t = apply(euler_cartan(m), t);
  return t.is_zero();
}

ExpPoly lift(const ExpPoly& g, unsigned k) {
  if (k < 1) throw std::domain_error("lift: k must be >= 1");
  require_analytic(g, "lift");
  ExpPoly r = g;
  for (unsigned i = 1; i < k; ++i) r = r.apply_raising(1);
  return r;
}

ExpPoly lower(const ExpPoly& psi, unsigned k) {
  if (psi.dims() != 1) throw std::domain_error("lower: d = 1 only");
  if (k < 1) throw std::domain_error("lower: k must be >= 1");
  ExpPoly g = psi;
  for (unsigned i = 1; i < k; ++i) g = g.apply_lowering(1);
  g = g.scaled(GaussianRational(rational_factorial(k - 1).inverse()));
  if (!g.is_analytic() || lift(g, k) != psi)
    throw std::domain_error("lower: not a pure level-" + std::to_string(k) + " element");
  return g;
}

TrueLevelDecomposition true_decompose(const ExpPoly& f) {
  if (f.dims() != 1) throw std::domain_error("true_decompose: d = 1 only");
  require_polynomial(f, "true_decompose");
  TrueLevelDecomposition dec;
  dec.dims = 1;
  unsigned top = membership_level(f);
  ExpPoly rest = f;
  for (unsigned level = top; level >= 1; --level) {
    ExpPoly g = rest;
    for (unsigned i = 1; i < level; ++i) g = g.apply_lowering(1);
    g = g.scaled(GaussianRational(rational_factorial(level - 1).inverse()));
    ExpPoly h = lift(g, level);
    dec.components[{level}] = h;
    rest = rest - h;
  }
  return dec;
}

std::vector<ExpPoly> fock_to_poly(const FockColumn& col) {
  if (col.k < 1 || col.functions.size() != col.k)
    throw std::domain_error("fock_to_poly: column size mismatch");
  for (const auto& g : col.functions) require_analytic(g, "fock_to_poly");
  const unsigned k = col.k;
  // phi_l = sum_{p >= l} (-1)^{p-l} (p-1)!/((p-l)!(l-1)!) g_p^{(p-l)}
  std::vector<ExpPoly> phi(k, ExpPoly::zero(1));
  for (unsigned l = 1; l <= k; ++l) {
    for (unsigned p = l; p <= k; ++p) {
      ExpPoly dg = col.functions[p - 1];
      for (unsigned i = 0; i < p - l; ++i) dg = dg.deriv_z(1);
      Rational c(factorial(p - 1), factorial(p - l) * factorial(l - 1));
      if ((p - l) % 2 == 1) c = -c;
      phi[l - 1] = phi[l - 1] + dg.scaled(GaussianRational(c));
    }
  }
  return phi;
}

FockColumn poly_to_fock(const std::vector<ExpPoly>& phi) {
  const unsigned k = static_cast<unsigned>(phi.size());
  if (k < 1) throw std::domain_error("poly_to_fock: empty input");
  for (const auto& p : phi) require_analytic(p, "poly_to_fock");
  FockColumn col;
  col.k = k;
  col.functions.assign(k, ExpPoly::zero(1));
  for (unsigned l = k; l >= 1; --l) {
    ExpPoly g = phi[l - 1];
    for (unsigned p = l + 1; p <= k; ++p) {
      ExpPoly dg = col.functions[p - 1];
      for (unsigned i = 0; i < p - l; ++i) dg = dg.deriv_z(1);
      Rational c(factorial(p - 1), factorial(p - l) * factorial(l - 1));
      if ((p - l) % 2 == 1) c = -c;
      g = g - dg.scaled(GaussianRational(c));
    }
    col.functions[l - 1] = g;
  }
  return col;
}

TrueLevelDecomposition multi_true_decompose(const ExpPoly& f) {
  require_polynomial(f, "multi_true_decompose");
  const unsigned d = f.dims();
  TrueLevelDecomposition dec;
  dec.dims = d;
  // Peel levels coordinate by coordinate; partial keys grow to length d.
  std::map<std::vector<unsigned>, ExpPoly> work;
  work[{}] = f;
  for (unsigned coord = 1; coord <= d; ++coord) {
    std::map<std::vector<unsigned>, ExpPoly> next;
    for (const auto& [prefix, comp] : work) {
      unsigned top = comp.is_zero() ? 1 : comp.max_zbar_degree(coord) + 1;
      ExpPoly rest = comp;
      for (unsigned level = top; level >= 1; --level) {
        ExpPoly g = rest;
        for (unsigned i = 1; i < level; ++i) g = g.apply_lowering(coord);
        g = g.scaled(GaussianRational(rational_factorial(level - 1).inverse()));
        ExpPoly h = g;
        for (unsigned i = 1; i < level; ++i) h = h.apply_raising(coord);
        rest = rest - h;
        std::vector<unsigned> key = prefix;
        key.push_back(level);
        next[std::move(key)] = std::move(h);
      }
    }
    work = std::move(next);
  }
  for (auto& [key, comp] : work)
    if (!comp.is_zero()) dec.components[key] = comp;
  if (dec.components.empty()) dec.components[std::vector<unsigned>(d, 1)] = ExpPoly::zero(d);
  return dec;
}

ExpPoly multi_true_represent(const ExpPoly& phi, const std::vector<unsigned>& level) {
  require_analytic(phi, "multi_true_represent");
  if (level.size() != phi.dims())
    throw std::domain_error("multi_true_represent: level index length != dims");
  ExpPoly r = phi;
  for (unsigned j = 0; j < level.size(); ++j) {
    if (level[j] < 1) throw std::domain_error("multi_true_represent: levels must be >= 1");
    for (unsigned i = 1; i < level[j]; ++i) r = r.apply_raising(j + 1);
  }
  return r;
}

bool homogeneous_membership(const ExpPoly& f, unsigned k) {
  require_polynomial(f, "homogeneous_membership");
  if (k < 1) throw std::domain_error("homogeneous_membership: k must be >= 1");
  ExpPoly t = f;
  NormalForm num = number_operator(f.dims());
  for (unsigned m = 0; m < k && !t.is_zero(); ++m) {
    ExpPoly shifted = apply(num, t) - t.scaled(GaussianRational(Rational((long long)m)));
    t = std::move(shifted);
  }
  return t.is_zero();
}

bool homogeneous_alt_membership(const ExpPoly& f, unsigned k) {
  require_polynomial(f, "homogeneous_alt_membership");
  if (k < 1) throw std::domain_error("homogeneous_alt_membership: k must be >= 1");
  const unsigned d = f.dims();
  // Enumerate all p with |p| = k and test each mixed zbar derivative.
  std::vector<unsigned> p(d, 0);
  p[0] = k;
  while (true) {
    ExpPoly t = f;
    for (unsigned j = 0; j < d && !t.is_zero(); ++j)
      for (unsigned i = 0; i < p[j]; ++i) t = t.apply_lowering(j + 1);
    if (!t.is_zero()) return false;
    // next composition of k into d parts
    if (d == 1) break;
    unsigned j = 0;
    while (j + 1 < d && p[j] == 0) ++j;
    if (j + 1 == d) break;
    unsigned head = p[j];
    p[j] = 0;
    p[j + 1] += 1;
    p[0] = head - 1;
  }
  return true;
}

bool quasi_membership(const ExpPoly& f, const std::vector<unsigned>& groups,
                      const std::vector<unsigned>& orders) {
  require_polynomial(f, "quasi_membership");
  if (groups.size() != orders.size())
    throw std::domain_error("quasi_membership: group/order tuple size mismatch");
  unsigned total = 0;
  for (unsigned m : groups) {
    if (m < 1) throw std::domain_error("quasi_membership: group sizes must be >= 1");
    total += m;
  }
  if (total != f.dims()) throw std::domain_error("quasi_membership: group sizes must sum to d");
  for (unsigned kj : orders)
    if (kj < 1) throw std::domain_error("quasi_membership: orders must be >= 1");

  const unsigned d = f.dims();
  bool member = true;
  unsigned offset = 0;
  for (unsigned gi = 0; gi < groups.size() && member; ++gi) {
    NormalForm num(d);
    for (unsigned j = 0; j < groups[gi]; ++j) {
      std::vector<unsigned> e(d, 0);
      e[offset + j] = 1;
      num.set_term({e, e}, GaussianRational(1));
    }
    ExpPoly t = f;
    for (unsigned m = 0; m < orders[gi] && !t.is_zero(); ++m)
      t = apply(num, t) - t.scaled(GaussianRational(Rational((long long)m)));
    member = t.is_zero();
    offset += groups[gi];
  }

  // Cross-check with the groupwise derivative form.
  bool alt = true;
  offset = 0;
  for (unsigned gi = 0; gi < groups.size() && alt; ++gi) {
    const unsigned m = groups[gi];
    const unsigned kj = orders[gi];
    std::vector<unsigned> p(m, 0);
    p[0] = kj;
    while (alt) {
      ExpPoly t = f;
      for (unsigned j = 0; j < m && !t.is_zero(); ++j)
        for (unsigned i = 0; i < p[j]; ++i) t = t.apply_lowering(offset + j + 1);
      if (!t.is_zero()) alt = false;
      if (m == 1) break;
      unsigned j = 0;
      while (j + 1 < m && p[j] == 0) ++j;
      if (j + 1 == m) break;
      unsigned head = p[j];
      p[j] = 0;
      p[j + 1] += 1;
      p[0] = head - 1;
    }
    offset += m;
  }
  if (member != alt)
    throw std::logic_error("quasi_membership: operator and derivative tests disagree");
  return member;
}

BigInt homogeneous_component_count(unsigned d, unsigned k) {
  if (d < 1 || k < 1) throw std::domain_error("homogeneous_component_count: d, k must be >= 1");
  return binomial(d + k - 1, d);
}

std::vector<std::vector<unsigned>> homogeneous_level_indices(unsigned d, unsigned k) {
  // p >= (1,...,1) with |p| <= k + d - 1, graded-lex order.
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> p(d, 1);
  auto emit_all = [&](auto&& self, unsigned pos, unsigned budget) -> void {
    if (pos == d) {
      out.push_back(p);
      return;
    }
    for (unsigned add = 0; add <= budget; ++add) {
      p[pos] = 1 + add;
      self(self, pos + 1, budget - add);
    }
    p[pos] = 1;
  };
  emit_all(emit_all, 0, k - 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    unsigned sa = 0, sb = 0;
    for (unsigned x : a) sa += x;
    for (unsigned x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

}  // namespace pfx
