#include "polyfock/exact_matrix.hpp"

#include <sstream>

namespace pfx {

ExactMatrix ExactMatrix::identity(unsigned n) {
  ExactMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::domain_error("ExactMatrix: shape mismatch");
  ExactMatrix r = a;
  for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + (-b); }

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::domain_error("ExactMatrix: shape mismatch");
  ExactMatrix r(a.rows_, b.cols_);
  for (unsigned i = 0; i < a.rows_; ++i)
    for (unsigned k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (unsigned j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& s) const {
  ExactMatrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

std::vector<GaussianRational> ExactMatrix::apply(const std::vector<GaussianRational>& v) const {
  if (v.size() != cols_) throw std::domain_error("ExactMatrix: vector length mismatch");
  std::vector<GaussianRational> out(rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (unsigned i = 0; i < rows_; ++i) {
    os << "[";
    for (unsigned j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

UniPoly char_poly(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw std::domain_error("char_poly: matrix must be square");
  const unsigned n = a.rows();
  if (n == 0) return UniPoly::constant(GaussianRational(1));
  // M = lambda I - A with UniPoly entries.
  std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      m[i][j] = UniPoly::constant(-a.at(i, j));
      if (i == j) m[i][j] = m[i][j] + UniPoly::variable();
    }
  // Bareiss: principal minors of lambda I - A are monic, so the pivot is
  // never the zero polynomial and no row exchange is needed.
  UniPoly prev = UniPoly::constant(GaussianRational(1));
  for (unsigned p = 0; p + 1 < n; ++p) {
    if (m[p][p].is_zero()) throw std::logic_error("char_poly: unexpected zero pivot");
    for (unsigned i = p + 1; i < n; ++i)
      for (unsigned j = p + 1; j < n; ++j)
        m[i][j] = (m[p][p] * m[i][j] - m[i][p] * m[p][j]).divide_exact(prev);
    prev = m[p][p];
  }
  return m[n - 1][n - 1];
}

namespace {

/// Row-reduces in place; returns pivot column per pivot row.
std::vector<unsigned> row_reduce(ExactMatrix& m) {
  std::vector<unsigned> pivots;
  unsigned row = 0;
  for (unsigned col = 0; col < m.cols() && row < m.rows(); ++col) {
    unsigned sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    GaussianRational inv = m.at(row, col).inverse();
    for (unsigned j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (unsigned i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      GaussianRational f = m.at(i, col);
      for (unsigned j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<GaussianRational>> nullspace(const ExactMatrix& a) {
  ExactMatrix m = a;
  std::vector<unsigned> pivots = row_reduce(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (unsigned c : pivots) is_pivot[c] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (unsigned free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> v(a.cols());
    v[free] = GaussianRational(1);
    for (unsigned r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

unsigned rank(const ExactMatrix& a) {
  ExactMatrix m = a;
  return static_cast<unsigned>(row_reduce(m).size());
}

bool solve(const ExactMatrix& a, const std::vector<GaussianRational>& b,
           std::vector<GaussianRational>& x) {
  if (b.size() != a.rows()) throw std::domain_error("solve: rhs length mismatch");
  ExactMatrix aug(a.rows(), a.cols() + 1);
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<unsigned> pivots = row_reduce(aug);
  for (unsigned r = 0; r < pivots.size(); ++r)
    if (pivots[r] == a.cols()) return false;  // pivot in rhs column
  x.assign(a.cols(), GaussianRational());
  for (unsigned r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return true;
}

}  // namespace pfx
