#include "polyfock/matrix_model.hpp"

#include "polyfock/decomposition.hpp"

#include <cmath>
#include <sstream>

namespace pfx {

ModelMatrices model_matrices(unsigned k) {
  if (k < 1) throw std::domain_error("model_matrices: k must be >= 1");
  ModelMatrices m{k, ExactMatrix(k, k), ExactMatrix(k, k), ExactMatrix(k, k)};
  Rational half_km1 = Rational((long long)k - 1, 2);
  for (unsigned i = 0; i < k; ++i)
    m.cartan.at(i, i) = GaussianRational(Rational((long long)i) - half_km1);
  for (unsigned i = 0; i + 1 < k; ++i) {
    m.lowering.at(i, i + 1) = GaussianRational(Rational((long long)(i + 1)));
    m.raising.at(i + 1, i) = GaussianRational(Rational((long long)(i + 1) - (long long)k));
  }
  return m;
}

OrthonormalMatrices orthonormal_matrices_float(unsigned k) {
  if (k < 1) throw std::domain_error("orthonormal_matrices_float: k must be >= 1");
  auto zeros = [k] { return std::vector<std::vector<double>>(k, std::vector<double>(k, 0.0)); };
  OrthonormalMatrices m{k, zeros(), zeros(), zeros()};
  for (unsigned i = 0; i < k; ++i) m.cartan[i][i] = (double)i - (double)(k - 1) / 2.0;
  for (unsigned i = 0; i + 1 < k; ++i) {
    double r = std::sqrt((double)(i + 1));
    m.lowering[i][i + 1] = r;
    m.raising[i + 1][i] = -r * (double)(k - (i + 1));
  }
  return m;
}

IntertwineReport intertwine_check(unsigned k, unsigned degree_bound) {
  IntertwineReport rep;
  ModelMatrices mm = model_matrices(k);
  Sl2Triple gen = sl2_generators(Rational((long long)k));
  const NormalForm* ops[3] = {&gen.raising, &gen.cartan, &gen.lowering};
  const ExactMatrix* mats[3] = {&mm.raising, &mm.cartan, &mm.lowering};
  const char* names[3] = {"raising", "cartan", "lowering"};
  for (unsigned slot = 1; slot <= k; ++slot) {
    for (unsigned n = 0; n <= degree_bound; ++n) {
      ExpPoly g = ExpPoly::monomial(1, {n}, {0});
      ExpPoly lifted = lift(g, slot);
      for (int which = 0; which < 3; ++which) {
        ExpPoly lhs = apply(*ops[which], lifted);
        ExpPoly rhs(1);
        for (unsigned m = 1; m <= k; ++m) {
          const GaussianRational& c = mats[which]->at(m - 1, slot - 1);
          if (!c.is_zero()) rhs = rhs + lift(g, m).scaled(c);
        }
        ++rep.checks;
        if (lhs != rhs && rep.ok) {
          rep.ok = false;
          std::ostringstream os;
          os << names[which] << " k=" << k << " slot=" << slot << " degree=" << n;
          rep.first_failure = os.str();
        }
      }
    }
  }
  return rep;
}

namespace {

std::string rational_term(const Rational& r, const std::string& body) {
  std::string s;
  if (r == Rational(1)) return body;
  if (r == Rational(-1)) return "-" + body;
  return r.to_string() + " " + body;
}

/// "(J0 - mu I)" with the sign folded in when mu is negative.
std::string cartan_shift_factor(const Rational& mu) {
  if (mu.is_zero()) return "(J0)";
  if (mu.is_negative()) return "(J0 + " + (-mu).to_string() + " I)";
  return "(J0 - " + mu.to_string() + " I)";
}

}  // namespace

std::map<std::pair<unsigned, unsigned>, MatrixUnit> matrix_units(unsigned k) {
  ModelMatrices mm = model_matrices(k);
  // Cartan eigenvalues mu_j = (j-1) - (k-1)/2 (1-indexed j) are distinct,
  // so Lagrange interpolation yields the diagonal idempotents.
  std::vector<Rational> mu(k);
  for (unsigned j = 1; j <= k; ++j) mu[j - 1] = Rational((long long)j - 1) - Rational((long long)k - 1, 2);

  std::map<std::pair<unsigned, unsigned>, MatrixUnit> units;
  std::vector<ExactMatrix> diag;
  std::vector<std::string> diag_expr;
  for (unsigned m = 1; m <= k; ++m) {
    ExactMatrix d = ExactMatrix::identity(k);
    Rational denom(1);
    std::string expr;
    for (unsigned j = 1; j <= k; ++j) {
      if (j == m) continue;
      ExactMatrix shift = mm.cartan - ExactMatrix::identity(k).scaled(GaussianRational(mu[j - 1]));
      d = d * shift;
      denom *= mu[m - 1] - mu[j - 1];
      expr += (expr.empty() ? "" : " ") + cartan_shift_factor(mu[j - 1]);
    }
    d = d.scaled(GaussianRational(denom.inverse()));
    if (expr.empty()) expr = "I";  // k = 1
    diag_expr.push_back(rational_term(denom.inverse(), expr));
    diag.push_back(std::move(d));
  }
  for (unsigned m = 1; m <= k; ++m)
    units[{m, m}] = MatrixUnit{diag[m - 1], diag_expr[m - 1]};

  for (unsigned m = 1; m <= k; ++m) {
    for (unsigned n = 1; n <= k; ++n) {
      if (m == n) continue;
      ExactMatrix t = diag[m - 1];
      Rational scale(1);
      std::string ladder;
      if (m < n) {
        // lowering transport: (N-)^{n-m} has (m,n) entry (n-1)!/(m-1)!
        unsigned steps = n - m;
        for (unsigned s = 0; s < steps; ++s) t = t * mm.lowering;
        scale = Rational(factorial(m - 1), factorial(n - 1));
        ladder = steps == 1 ? "Jm" : "Jm^" + std::to_string(steps);
      } else {
        // raising transport: (N+)^{m-n} has (m,n) entry prod_{j=n}^{m-1}(j-k)
        unsigned steps = m - n;
        for (unsigned s = 0; s < steps; ++s) t = t * mm.raising;
        Rational prod(1);
        for (unsigned j = n; j < m; ++j) prod *= Rational((long long)j - (long long)k);
        scale = prod.inverse();
        ladder = steps == 1 ? "Jp" : "Jp^" + std::to_string(steps);
      }
      t = t * diag[n - 1];
      t = t.scaled(GaussianRational(scale));
      auto wrap = [](const std::string& e) { return e == "I" ? e : "(" + e + ")"; };
      std::string expr =
          rational_term(scale, wrap(diag_expr[m - 1])) + " " + ladder + " " + wrap(diag_expr[n - 1]);
      units[{m, n}] = MatrixUnit{std::move(t), std::move(expr)};
    }
  }
  return units;
}

ExactMatrix scalar_operator_decompose(const ExactMatrix& t, unsigned k) {
  if (t.rows() != k || t.cols() != k)
    throw std::domain_error("scalar_operator_decompose: shape mismatch");
  auto units = matrix_units(k);
  ExactMatrix coeffs = t;  // s_{m,n} = entry (m,n) against elementary units
  ExactMatrix rebuilt(k, k);
  for (unsigned m = 1; m <= k; ++m)
    for (unsigned n = 1; n <= k; ++n) {
      const GaussianRational& s = coeffs.at(m - 1, n - 1);
      if (!s.is_zero()) rebuilt = rebuilt + units[{m, n}].matrix.scaled(s);
    }
  if (rebuilt != t) throw std::logic_error("scalar_operator_decompose: reconstruction mismatch");
  return coeffs;
}

}  // namespace pfx
