#pragma once

#include <complex>
#include <vector>

#include "mono/symexpr.hpp"

namespace mono {

// Dense matrix over the exact ring.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Mat identity(int n);
  static Mat diag(const std::vector<SymExpr>& d);
  static Mat from_rows(const std::vector<std::vector<SymExpr>>& rows);
  static Mat from_longs(const std::vector<std::vector<long>>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }

  SymExpr& at(int i, int j) { return a_[i * c_ + j]; }
  const SymExpr& at(int i, int j) const { return a_[i * c_ + j]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  bool is_zero() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<SymExpr> a_;
};

Mat operator*(const SymExpr& s, const Mat& m);

// Signed permutation sum over all column choices; fine for the small
// dimensions used here.
SymExpr det_leibniz(const Mat& m);

// Gauss-Jordan over exact Gaussian rationals; requires constant entries.
Mat inverse_rational(const Mat& m);

// Inverse of a matrix with exactly one nonzero (single-term) entry per row
// and per column.
Mat monomial_inverse(const Mat& m);

// Truncated exponential series; throws if the argument is not nilpotent.
Mat matrix_exp_nilpotent(const Mat& n);

bool is_upper_unitriangular(const Mat& m);
bool is_diagonal(const Mat& m);

// Matrix with entry (k, tau[k]) = 1, tau given 1-based.
Mat permutation_matrix(const std::vector<int>& tau);

Mat subst_matrix(const Mat& m, int id, const SymExpr& value);

using NumMat = std::vector<std::vector<std::complex<double>>>;

NumMat eval_matrix(const Mat& m,
                   const std::map<int, std::complex<double>>& overrides = {});

}  // namespace mono
