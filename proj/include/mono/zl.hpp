#pragma once

#include <map>
#include <utility>

#include "mono/symmatrix.hpp"

namespace mono {

// Formal Laurent polynomial in z^{1/4} and log z with exact coefficients.
// A term is keyed by (a4, b), standing for z^{a4/4} (log z)^b.
class ZLPoly {
 public:
  ZLPoly() = default;
  explicit ZLPoly(const SymExpr& c);
  static ZLPoly zpow4(int a4);
  static ZLPoly logz(int b = 1);

  bool is_zero() const { return t_.empty(); }
  SymExpr coeff(int a4, int b) const;

  ZLPoly operator+(const ZLPoly& o) const;
  ZLPoly operator-(const ZLPoly& o) const;
  ZLPoly operator*(const ZLPoly& o) const;
  bool operator==(const ZLPoly& o) const { return t_ == o.t_; }
  bool operator!=(const ZLPoly& o) const { return !(*this == o); }

  // Multiplies by z^{a4/4} (log z)^b.
  ZLPoly shifted(int a4, int b = 0) const;

  const std::map<std::pair<int, int>, SymExpr>& terms() const { return t_; }
  std::string str() const;

 private:
  void add(int a4, int b, const SymExpr& c);
  std::map<std::pair<int, int>, SymExpr> t_;
};

ZLPoly operator*(const SymExpr& s, const ZLPoly& p);

class ZLMat {
 public:
  ZLMat() = default;
  ZLMat(int rows, int cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static ZLMat from(const Mat& m);
  static ZLMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  ZLPoly& at(int i, int j) { return a_[i * c_ + j]; }
  const ZLPoly& at(int i, int j) const { return a_[i * c_ + j]; }

  ZLMat operator+(const ZLMat& o) const;
  ZLMat operator-(const ZLMat& o) const;
  ZLMat operator*(const ZLMat& o) const;
  bool operator==(const ZLMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const ZLMat& o) const { return !(*this == o); }
  ZLMat transpose() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<ZLPoly> a_;
};

// Rational diagonal of a diagonal matrix; throws if entries are not
// real rational constants.
std::vector<Rat> diagonal_rationals(const Mat& m);

// Entrywise multiplication by z^{sign (mu_i - mu_j)}. Each shift times 4
// must be an integer.
ZLMat zl_zmu_sandwich(const ZLMat& m, const std::vector<Rat>& mu, int sign);

// z^mu z^R G z^{-R} z^{-mu} for diagonal rational mu; requires ad_R to be
// nilpotent on G so the log-series terminates.
ZLMat conj_by_zpow(const Mat& g, const Mat& mu, const Mat& r);

// True when every term is a plain nonnegative integer power of z.
bool zl_is_polynomial(const ZLMat& m);

// Coefficient of z^0 (log z)^0.
Mat zl_constant_term(const ZLMat& m);

// Substitutes z -> -z; defined only for integer powers of z without logs.
ZLMat zl_negate_z(const ZLMat& m);

}  // namespace mono
