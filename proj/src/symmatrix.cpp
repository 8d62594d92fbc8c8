#include "mono/symmatrix.hpp"

#include <stdexcept>

namespace mono {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = SymExpr(1L);
  return m;
}

Mat Mat::diag(const std::vector<SymExpr>& d) {
  int n = static_cast<int>(d.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<SymExpr>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_longs(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<SymExpr>> e;
  for (auto& row : rows) {
    std::vector<SymExpr> er;
    for (long v : row) er.push_back(SymExpr(v));
    e.push_back(std::move(er));
  }
  return from_rows(e);
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch");
  Mat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch");
  Mat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
  return m;
}

Mat Mat::operator-() const {
  Mat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("shape mismatch");
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const SymExpr& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        m.at(i, j) += x * o.at(k, j);
      }
    }
  return m;
}

Mat Mat::transpose() const {
  Mat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Mat::is_zero() const {
  for (auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

Mat operator*(const SymExpr& s, const Mat& m) {
  Mat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = s * m.at(i, j);
  return r;
}

namespace {

void det_rec(const Mat& m, int row, std::vector<int>& choice,
             std::vector<bool>& used, int inversions, const SymExpr& prod,
             SymExpr& acc) {
  const int n = m.rows();
  if (row == n) {
    acc += (inversions % 2 == 0) ? prod : -prod;
    return;
  }
  for (int j = 0; j < n; ++j) {
    if (used[j] || m.at(row, j).is_zero()) continue;
    int d = 0;
    for (int k = 0; k < row; ++k)
      if (choice[k] > j) ++d;
    used[j] = true;
    choice[row] = j;
    det_rec(m, row + 1, choice, used, inversions + d, prod * m.at(row, j), acc);
    used[j] = false;
  }
}

}  // namespace

SymExpr det_leibniz(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  SymExpr acc;
  std::vector<int> choice(m.rows());
  std::vector<bool> used(m.rows(), false);
  det_rec(m, 0, choice, used, 0, SymExpr(1L), acc);
  return acc;
}

Mat inverse_rational(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  std::vector<std::vector<GaussRat>> a(n, std::vector<GaussRat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto c = m.at(i, j).constant_value();
      if (!c) throw std::domain_error("matrix entries must be constants");
      a[i][j] = *c;
    }
  std::vector<std::vector<GaussRat>> b(n, std::vector<GaussRat>(n));
  for (int i = 0; i < n; ++i) b[i][i] = GaussRat(1L);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    GaussRat inv = a[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      a[col][j] = a[col][j] * inv;
      b[col][j] = b[col][j] * inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      GaussRat f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - f * a[col][j];
        b[r][j] = b[r][j] - f * b[col][j];
      }
    }
  }
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = SymExpr(b[i][j]);
  return out;
}

Mat monomial_inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  Mat out(n, n);
  std::vector<int> col_seen(n, 0);
  for (int i = 0; i < n; ++i) {
    int nz = -1;
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j).is_zero()) continue;
      if (nz >= 0) throw std::domain_error("row has several nonzero entries");
      nz = j;
    }
    if (nz < 0) throw std::domain_error("zero row");
    if (col_seen[nz]++) throw std::domain_error("column has several nonzero entries");
    out.at(nz, i) = m.at(i, nz).inverse();
  }
  return out;
}

Mat matrix_exp_nilpotent(const Mat& n) {
  if (n.rows() != n.cols()) throw std::invalid_argument("exp of non-square matrix");
  int dim = n.rows();
  Mat acc = Mat::identity(dim);
  Mat power = Mat::identity(dim);
  Rat fact(1);
  for (int k = 1; k <= dim; ++k) {
    power = power * n;
    if (power.is_zero()) return acc;
    fact *= k;
    Rat invf = Rat(1) / fact;
    acc = acc + SymExpr(GaussRat(invf)) * power;
  }
  throw std::domain_error("matrix is not nilpotent");
}

bool is_upper_unitriangular(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i == j && !m.at(i, j).is_one()) return false;
      if (i > j && !m.at(i, j).is_zero()) return false;
    }
  return true;
}

bool is_diagonal(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && !m.at(i, j).is_zero()) return false;
  return true;
}

Mat permutation_matrix(const std::vector<int>& tau) {
  int n = static_cast<int>(tau.size());
  Mat p(n, n);
  std::vector<int> seen(n, 0);
  for (int k = 0; k < n; ++k) {
    int t = tau[k];
    if (t < 1 || t > n || seen[t - 1]++)
      throw std::invalid_argument("not a permutation");
    p.at(k, t - 1) = SymExpr(1L);
  }
  return p;
}

Mat subst_matrix(const Mat& m, int id, const SymExpr& value) {
  Mat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).subst(id, value);
  return out;
}

std::vector<std::vector<std::complex<double>>> eval_matrix(
    const Mat& m, const std::map<int, std::complex<double>>& overrides) {
  std::vector<std::vector<std::complex<double>>> out(
      m.rows(), std::vector<std::complex<double>>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).eval(overrides);
  return out;
}

}  // namespace mono
