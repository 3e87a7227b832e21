#pragma once

#include "polyfock/scalars.hpp"
#include "polyfock/univariate.hpp"

#include <vector>

namespace pfx {

/// Dense matrix over GaussianRational with exact arithmetic throughout.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(unsigned rows, unsigned cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static ExactMatrix identity(unsigned n);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  GaussianRational& at(unsigned r, unsigned c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const GaussianRational& at(unsigned r, unsigned c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const;

  ExactMatrix operator-() const;
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix scaled(const GaussianRational& s) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

  std::string to_string() const;

 private:
  unsigned rows_, cols_;
  std::vector<GaussianRational> data_;
};

/// det(lambda I - A), computed by fraction-free Bareiss elimination over
/// the polynomial ring; every intermediate division is exact.
UniPoly char_poly(const ExactMatrix& a);

/// Exact basis of ker(A), as columns.
std::vector<std::vector<GaussianRational>> nullspace(const ExactMatrix& a);

unsigned rank(const ExactMatrix& a);

/// Solves A x = b exactly; returns false when the system is inconsistent.
/// Underdetermined systems get one particular solution (free vars zero).
bool solve(const ExactMatrix& a, const std::vector<GaussianRational>& b,
           std::vector<GaussianRational>& x);

}  // namespace pfx
