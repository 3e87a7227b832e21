// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All algebraic checks are exact; floats appear only where a float
// mirror is part of the contract.

#include "polyfock/decomposition.hpp"
#include "polyfock/kernels.hpp"
#include "polyfock/matrix_model.hpp"
#include "polyfock/parser.hpp"
#include "polyfock/serialize.hpp"
#include "polyfock/spectral.hpp"
#include "polyfock/verify.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace pfx;

namespace {

std::string g_cli_path;

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> run;
};

GaussianRational gr(long long n, long long d = 1) { return GaussianRational(Rational(n, d)); }

bool criterion_sl2_relations(std::string& detail) {
  std::vector<Rational> ks;
  for (long long k = 1; k <= 8; ++k) ks.push_back(Rational(k));
  ks.push_back(Rational(1, 2));
  ks.push_back(Rational(-3, 7));
  for (const auto& k : ks) {
    Sl2Triple g = sl2_generators(k);
    if (commutator(g.lowering, g.raising) != g.cartan + g.cartan) return false;
    if (commutator(g.raising, g.cartan) != -g.raising) return false;
    if (commutator(g.lowering, g.cartan) != g.lowering) return false;
  }
  detail = "k in {1..8, 1/2, -3/7}, exact";
  return true;
}

bool criterion_euler_cartan(std::string& detail) {
  for (unsigned k = 1; k <= 8; ++k) {
    NormalForm prod = NormalForm::identity(1);
    for (unsigned m = 0; m < k; ++m) prod = compose(prod, euler_cartan(m));
    OperatorWord w;
    for (unsigned i = 0; i < k; ++i) w.letters.push_back({true, 1});
    for (unsigned i = 0; i < k; ++i) w.letters.push_back({false, 1});
    if (prod != normal_order(w)) return false;
  }
  detail = "k <= 8, exact";
  return true;
}

bool criterion_decomposition(std::string& detail) {
  std::mt19937_64 rng(default_seed());
  for (int trial = 0; trial < 200; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 1, 8, 6);
    TrueLevelDecomposition dec = true_decompose(f);
    if (dec.sum() != f) return false;
    for (auto i = dec.components.begin(); i != dec.components.end(); ++i)
      for (auto j = std::next(i); j != dec.components.end(); ++j)
        if (!inner_product(i->second, j->second).is_zero()) return false;
    unsigned top = membership_level(f);
    FockColumn col;
    col.k = top;
    for (unsigned l = 1; l <= top; ++l) col.functions.push_back(lower(dec.component({l}), l));
    std::vector<ExpPoly> phi = fock_to_poly(col);
    ExpPoly rebuilt(1);
    for (unsigned l = 1; l <= top; ++l)
      rebuilt = rebuilt + ExpPoly::monomial(1, {0}, {l - 1}) * phi[l - 1];
    if (rebuilt != f) return false;
    FockColumn back = poly_to_fock(phi);
    for (unsigned l = 1; l <= top; ++l)
      if (back.functions[l - 1] != col.functions[l - 1]) return false;
    for (unsigned l = 1; l <= top; ++l)
      if (lower(lift(col.functions[l - 1], l), l) != col.functions[l - 1]) return false;
  }
  detail = "200 seeded polynomials, degree <= 8, exact";
  return true;
}

bool criterion_isometry(std::string& detail) {
  std::mt19937_64 rng(default_seed() + 1);
  for (unsigned k = 1; k <= 6; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      ExpPoly g = oracle::random_analytic(rng, 1, 5, 4);
      ExpPoly psi = lift(g, k);
      if (norm_sq(psi) != GaussianRational(rational_factorial(k - 1)) * norm_sq(g)) return false;
      if (norm_sq(psi.apply_raising(1)) != gr((long long)k) * norm_sq(psi)) return false;
    }
  }
  detail = "k, l <= 6, exact";
  return true;
}

bool criterion_kernels(std::string& detail) {
  std::mt19937_64 rng(default_seed() + 2);
  for (int trial = 0; trial < 25; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 1, 6, 5);
    for (unsigned k = 1; k <= 4; ++k)
      if (project_true(f, k, ProjectionMethod::kernel) !=
          project_true(f, k, ProjectionMethod::gram))
        return false;
  }
  for (unsigned k = 1; k <= 5; ++k) {
    UniPoly p = kernel_factor_check(k);
    if (p.degree() != (int)k - 1) return false;
    if (p.coeff(0) != GaussianRational(1)) return false;
  }
  detail = "projection agreement k <= 4 deg <= 6; factored form k <= 5 with p(0) = 1";
  return true;
}

bool criterion_landau(std::string& detail) {
  for (unsigned k = 1; k <= 6; ++k) {
    RestrictedMatrix rm = restrict_to_Fk(landau_hamiltonian(), k);
    SpectrumReport rep = spectrum(rm);
    if (!rep.all_exact()) return false;
    std::vector<GaussianRational> expect;
    for (unsigned j = 0; j < k; ++j) expect.push_back(gr((long long)j));
    if (rep.exact_values_with_multiplicity() != expect) return false;
    for (unsigned j = 1; j <= k; ++j) {
      auto basis = eigenfunctions(rm, gr((long long)j - 1));
      if (basis.size() != 1) return false;
      for (unsigned i = 0; i < k; ++i)
        if (basis[0][i].is_zero() != (i != j - 1)) return false;
    }
  }
  detail = "eigenvalues {0..k-1}, pure-level eigenspaces, k <= 6, exact";
  return true;
}

bool criterion_modified_landau(std::string& detail) {
  SpectrumReport rep = spectrum(restrict_to_Fk(modified_landau(gr(1, 2), gr(3, 8)), 2));
  if (rep.characteristic != UniPoly({gr(3, 16), gr(-1), gr(1)})) return false;
  if (!rep.all_exact()) return false;
  if (rep.exact_values_with_multiplicity() !=
      std::vector<GaussianRational>{gr(1, 4), gr(3, 4)})
    return false;

  std::mt19937_64 rng(default_seed() + 3);
  for (int trial = 0; trial < 3; ++trial) {
    GaussianRational beta = oracle::random_coeff(rng, false);
    NormalForm op = modified_landau(GaussianRational(0), beta);
    for (unsigned k = 1; k <= 6; ++k) {
      SpectrumReport r = spectrum(restrict_to_Fk(op, k));
      if (!r.all_exact()) return false;
      std::vector<GaussianRational> expect;
      for (unsigned j = 0; j < k; ++j) expect.push_back(gr((long long)j));
      if (r.exact_values_with_multiplicity() != expect) return false;
    }
    NormalForm shifted = NormalForm::raising(1) + NormalForm::scalar(beta, 1);
    for (unsigned j = 1; j <= 5; ++j) {
      NormalForm power = NormalForm::identity(1);
      for (unsigned i = 1; i < j; ++i) power = compose(power, shifted);
      for (unsigned n = 0; n <= 4; ++n) {
        ExpPoly f = ExpPoly::monomial(1, {n}, {0});
        ExpPoly psi = apply(power, f);
        if (apply(op, psi) != psi.scaled(gr((long long)j - 1))) return false;
      }
    }
  }
  detail = "char poly x^2 - x + 3/16 with roots {1/4, 3/4}; alpha = 0 isospectral, exact";
  return true;
}

bool criterion_matrix_model(std::string& detail) {
  for (unsigned k = 1; k <= 8; ++k) {
    ModelMatrices m = model_matrices(k);
    auto comm = [](const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; };
    if (comm(m.lowering, m.raising) != m.cartan + m.cartan) return false;
    if (comm(m.raising, m.cartan) != -m.raising) return false;
    if (comm(m.lowering, m.cartan) != m.lowering) return false;

    OrthonormalMatrices om = orthonormal_matrices_float(k);
    std::vector<double> dscale(k, 1.0);
    for (unsigned i = 1; i < k; ++i) dscale[i] = dscale[i - 1] * std::sqrt((double)i);
    double err = 0.0;
    auto acc = [&](const ExactMatrix& a, const std::vector<std::vector<double>>& b) {
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
          err = std::max(err,
                         std::fabs(a.at(i, j).re.to_double() * dscale[i] / dscale[j] - b[i][j]));
    };
    acc(m.lowering, om.lowering);
    acc(m.cartan, om.cartan);
    acc(m.raising, om.raising);
    if (err >= 1e-12) return false;
  }
  for (unsigned k = 1; k <= 5; ++k) {
    auto units = matrix_units(k);
    ExactMatrix sum(k, k);
    for (unsigned m = 1; m <= k; ++m) sum = sum + units[{m, m}].matrix;
    if (sum != ExactMatrix::identity(k)) return false;
    for (unsigned m = 1; m <= k; ++m)
      for (unsigned n = 1; n <= k; ++n)
        for (unsigned p = 1; p <= k; ++p)
          for (unsigned q = 1; q <= k; ++q) {
            ExactMatrix prod = units[{m, n}].matrix * units[{p, q}].matrix;
            ExactMatrix expect = n == p ? units[{m, q}].matrix : ExactMatrix(k, k);
            if (prod != expect) return false;
          }
    ExactMatrix stacked(k * k, k * k);
    unsigned col = 0;
    for (auto& [mn, unit] : units) {
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) stacked.at(i * k + j, col) = unit.matrix.at(i, j);
      ++col;
    }
    if (rank(stacked) != k * k) return false;
  }
  detail = "commutators k <= 8 exact; units k <= 5; float similarity < 1e-12";
  return true;
}

bool criterion_multidim(std::string& detail) {
  std::mt19937_64 rng(default_seed() + 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<unsigned> dpick(1, 3), kpick(1, 4);
    unsigned d = dpick(rng), k = kpick(rng);
    ExpPoly f = oracle::random_polynomial(rng, d, 4, 4);
    if (homogeneous_membership(f, k) != homogeneous_alt_membership(f, k)) return false;
    auto indices = homogeneous_level_indices(d, k);
    std::uniform_int_distribution<size_t> pick(0, indices.size() - 1);
    ExpPoly member = multi_true_represent(oracle::random_analytic(rng, d, 3, 3), indices[pick(rng)]);
    if (!homogeneous_membership(member, k) || !homogeneous_alt_membership(member, k)) return false;
  }
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned k = 1; k <= 4; ++k) {
      unsigned brute = 0;
      std::vector<unsigned> m(d, 0);
      while (true) {
        unsigned tot = 0;
        for (unsigned x : m) tot += x;
        if (tot <= k - 1) ++brute;
        unsigned j = 0;
        while (j < d && m[j] == k) m[j++] = 0;
        if (j == d) break;
        ++m[j];
      }
      if (homogeneous_component_count(d, k) != BigInt(brute)) return false;
      if (homogeneous_level_indices(d, k).size() != brute) return false;
    }
  // quasi-homogeneous via per-group product construction
  std::vector<std::pair<std::vector<unsigned>, unsigned>> configs = {{{1, 1}, 2u}, {{2, 1}, 3u}};
  for (const auto& [groups, d] : configs) {
    for (int trial = 0; trial < 25; ++trial) {
      ExpPoly f = ExpPoly::one(d);
      std::vector<unsigned> group_sum(groups.size(), 0);
      unsigned offset = 0;
      for (size_t gi = 0; gi < groups.size(); ++gi) {
        for (unsigned j = 0; j < groups[gi]; ++j) {
          unsigned lvl = std::uniform_int_distribution<unsigned>(1, 3)(rng);
          group_sum[gi] += lvl;
          std::vector<unsigned> ze(d, 0);
          ze[offset + j] = std::uniform_int_distribution<unsigned>(0, 2)(rng);
          ExpPoly factor = ExpPoly::monomial(d, ze, std::vector<unsigned>(d, 0));
          for (unsigned i = 1; i < lvl; ++i) factor = factor.apply_raising(offset + j + 1);
          f = f * factor;
        }
        offset += groups[gi];
      }
      std::vector<unsigned> orders(groups.size());
      for (auto& o : orders) o = std::uniform_int_distribution<unsigned>(1, 3)(rng);
      bool predicted = true;
      for (size_t gi = 0; gi < groups.size(); ++gi)
        predicted = predicted && group_sum[gi] <= orders[gi] + groups[gi] - 1;
      if (quasi_membership(f, groups, orders) != predicted) return false;
    }
  }
  detail = "100 seeded samples d <= 3 k <= 4; counts by enumeration; quasi m = (1,1), (2,1)";
  return true;
}

bool criterion_symmetry(std::string& detail) {
  std::mt19937_64 rng(default_seed() + 5);
  GaussianRational alpha35(Rational(3, 5), Rational(4, 5));
  for (int trial = 0; trial < 25; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 1, 6, 5);
    for (const auto& alpha : {GaussianRational(0, 1), alpha35}) {
      ExpPoly rf = f.rotate({{alpha}});
      if (membership_level(rf) != membership_level(f)) return false;
      if (norm_sq(rf) != norm_sq(f)) return false;
    }
    GaussianRational a = oracle::random_coeff(rng);
    ExpPoly wf = f.weyl_shift({a}, true);
    if (membership_level(wf) != membership_level(f)) return false;
    if (norm_sq(wf) != norm_sq(f)) return false;
  }
  std::vector<std::vector<std::vector<GaussianRational>>> unitaries2 = {
      {{GaussianRational(Rational(3, 5)), GaussianRational(Rational(4, 5))},
       {GaussianRational(Rational(-4, 5)), GaussianRational(Rational(3, 5))}},
      {{GaussianRational(Rational(3, 5)), GaussianRational(Rational(0), Rational(4, 5))},
       {GaussianRational(Rational(0), Rational(4, 5)), GaussianRational(Rational(3, 5))}}};
  for (int trial = 0; trial < 10; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 2, 4, 4);
    for (const auto& u : unitaries2) {
      ExpPoly rf = f.rotate(u);
      if (norm_sq(rf) != norm_sq(f)) return false;
      for (unsigned k = 1; k <= 3; ++k)
        if (homogeneous_membership(rf, k) != homogeneous_membership(f, k)) return false;
    }
    GaussianRational a1 = oracle::random_coeff(rng), a2 = oracle::random_coeff(rng);
    if (norm_sq(f.weyl_shift({a1, a2}, true)) != norm_sq(f)) return false;
  }
  detail = "rotations (incl. (3+4i)/5) and gauge Weyl shifts, exact";
  return true;
}

bool criterion_oracle_crosscheck(std::string& detail) {
  for (unsigned p = 0; p <= 6; ++p) {
    for (unsigned q = 0; q <= 6; ++q) {
      ExpScalar exact =
          inner_product(ExpPoly::monomial(1, {p}, {0}), ExpPoly::monomial(1, {q}, {0}));
      std::complex<double> numeric = oracle::quadrature_moment(p, q);
      if (p == q) {
        double ex = exact.coeff().re.to_double();
        if (std::abs(numeric.real() - ex) / ex >= 1e-8) return false;
        if (std::abs(numeric.imag()) >= 1e-8) return false;
      } else {
        if (!exact.is_zero()) return false;
        if (std::abs(numeric) >= 1e-8) return false;
      }
    }
  }
  detail = "monomial moments vs Gaussian quadrature, exponents <= 6, rel 1e-8";
  return true;
}

bool criterion_cli(std::string& detail) {
  const char* corpus[] = {
      "a", "ad", "I", "ad a", "a ad", "ad^2 a^2", "ad^3 a", "2 ad a", "1/2 ad", "-1/2 ad",
      "-ad^2", "3 I", "ad a + I", "ad a - I", "ad^2 a - 3/2 ad", "J0", "Jp", "Jm",
      "J0 + 1/2 I", "J0 + 1/2 I + 1/2 Jp + 3/8 Jm", "Jp Jm", "Jm Jp", "(Jp + Jm)^2",
      "1/2 i a", "(1/2, -3/4) ad a", "2/3 ad^4 a^2 - 5 ad^3 a^3 + I", "a^5",
      "ad^5 + ad^3 - ad", "(ad a)^3", "J0^2 - 1/4 I"};
  if (sizeof(corpus) / sizeof(corpus[0]) != 30) return false;
  for (const char* src : corpus) {
    NormalForm nf = parse_operator(src, Rational(2));
    std::string printed = pretty_print(nf);
    if (parse_operator(printed, Rational(2)) != nf) return false;
    if (pretty_print(parse_operator(printed, Rational(2))) != printed) return false;
  }
  std::mt19937_64 rng(default_seed() + 6);
  for (int trial = 0; trial < 20; ++trial) {
    ExpPoly f = oracle::random_polynomial(rng, 1 + trial % 3, 5, 5);
    json j = to_json(f);
    if (exp_poly_from_json(j) != f) return false;
    if (j.dump() != to_json(exp_poly_from_json(j)).dump()) return false;
  }

  auto started = std::chrono::steady_clock::now();
  SuiteParams params;
  params.seed = default_seed();
  SuiteResult all = run_suite("all", params);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (!all.pass || secs >= 120.0) return false;

  std::ostringstream os;
  os << "golden corpus + serialization byte-exact; verify all passed in " << std::fixed
     << std::setprecision(1) << secs << "s";
  if (!g_cli_path.empty()) {
    std::string cmd = "\"" + g_cli_path + "\" verify all > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc != 0) return false;
    os << " (CLI exit 0)";
  }
  detail = os.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  std::vector<Criterion> criteria = {
      {1, "sl(2) commutation relations", criterion_sl2_relations},
      {2, "Euler-Cartan factorization", criterion_euler_cartan},
      {3, "decomposition suite", criterion_decomposition},
      {4, "isometry-squared norms", criterion_isometry},
      {5, "kernels", criterion_kernels},
      {6, "Landau spectrum", criterion_landau},
      {7, "modified Landau", criterion_modified_landau},
      {8, "matrix model", criterion_matrix_model},
      {9, "multidimensional spaces", criterion_multidim},
      {10, "symmetry invariance", criterion_symmetry},
      {11, "oracle cross-check", criterion_oracle_crosscheck},
      {12, "CLI and serialization", criterion_cli},
  };
  bool all_pass = true;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.number << ": "
              << c.name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << " [" << std::fixed << std::setprecision(0) << ms << " ms]" << std::endl;
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}
