#include "mono/zl.hpp"

#include <stdexcept>

namespace mono {

ZLPoly::ZLPoly(const SymExpr& c) { add(0, 0, c); }

ZLPoly ZLPoly::zpow4(int a4) {
  ZLPoly p;
  p.add(a4, 0, SymExpr(1L));
  return p;
}

ZLPoly ZLPoly::logz(int b) {
  ZLPoly p;
  p.add(0, b, SymExpr(1L));
  return p;
}

void ZLPoly::add(int a4, int b, const SymExpr& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a4, b);
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_[key] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

SymExpr ZLPoly::coeff(int a4, int b) const {
  auto it = t_.find({a4, b});
  return it == t_.end() ? SymExpr() : it->second;
}

ZLPoly ZLPoly::operator+(const ZLPoly& o) const {
  ZLPoly r = *this;
  for (auto& [k, c] : o.t_) r.add(k.first, k.second, c);
  return r;
}

ZLPoly ZLPoly::operator-(const ZLPoly& o) const {
  ZLPoly r = *this;
  for (auto& [k, c] : o.t_) r.add(k.first, k.second, -c);
  return r;
}

ZLPoly ZLPoly::operator*(const ZLPoly& o) const {
  ZLPoly r;
  for (auto& [k1, c1] : t_)
    for (auto& [k2, c2] : o.t_)
      r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

ZLPoly ZLPoly::shifted(int a4, int b) const {
  ZLPoly r;
  for (auto& [k, c] : t_) r.add(k.first + a4, k.second + b, c);
  return r;
}

ZLPoly operator*(const SymExpr& s, const ZLPoly& p) {
  return ZLPoly(s) * p;
}

std::string ZLPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto& [k, c] : t_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (k.first != 0) {
      out += "*z^";
      if (k.first % 4 == 0)
        out += std::to_string(k.first / 4);
      else
        out += "(" + std::to_string(k.first) + "/4)";
    }
    if (k.second != 0) out += "*logz^" + std::to_string(k.second);
  }
  return out;
}

ZLMat ZLMat::from(const Mat& m) {
  ZLMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r.at(i, j) = ZLPoly(m.at(i, j));
  return r;
}

ZLMat ZLMat::identity(int n) { return from(Mat::identity(n)); }

ZLMat ZLMat::operator+(const ZLMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch");
  ZLMat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
  return m;
}

ZLMat ZLMat::operator-(const ZLMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch");
  ZLMat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
  return m;
}

ZLMat ZLMat::operator*(const ZLMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("shape mismatch");
  ZLMat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
      }
    }
  return m;
}

ZLMat ZLMat::transpose() const {
  ZLMat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

std::vector<Rat> diagonal_rationals(const Mat& m) {
  if (!is_diagonal(m)) throw std::domain_error("matrix is not diagonal");
  std::vector<Rat> d;
  for (int i = 0; i < m.rows(); ++i) {
    auto c = m.at(i, i).constant_value();
    if (!c || !c->is_real())
      throw std::domain_error("diagonal entries must be real rationals");
    d.push_back(c->re);
  }
  return d;
}

ZLMat zl_zmu_sandwich(const ZLMat& m, const std::vector<Rat>& mu, int sign) {
  if (static_cast<int>(mu.size()) != m.rows() || m.rows() != m.cols())
    throw std::invalid_argument("shape mismatch");
  ZLMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      Rat shift4 = (mu[i] - mu[j]) * 4 * sign;
      if (!rat_is_integer(shift4))
        throw std::domain_error("exponent shift is not a quarter-integer");
      r.at(i, j) = m.at(i, j).shifted(static_cast<int>(rat_to_long(shift4)));
    }
  return r;
}

ZLMat conj_by_zpow(const Mat& g, const Mat& mu, const Mat& r) {
  int n = g.rows();
  if (g.cols() != n || r.rows() != n || r.cols() != n)
    throw std::invalid_argument("shape mismatch");
  auto mud = diagonal_rationals(mu);

  // z^R G z^{-R} as a terminating series in log z.
  ZLMat acc(n, n);
  Mat term = g;
  Rat fact(1);
  int k = 0;
  for (;;) {
    ZLPoly lk = ZLPoly::logz(k);
    SymExpr invf(GaussRat(Rat(1) / fact));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!term.at(i, j).is_zero())
          acc.at(i, j) = acc.at(i, j) + (invf * term.at(i, j)) * lk;
    term = r * term - term * r;
    if (term.is_zero()) break;
    ++k;
    if (k > 2 * n) throw std::domain_error("log-series does not terminate");
    fact *= k;
  }
  return zl_zmu_sandwich(acc, mud, +1);
}

bool zl_is_polynomial(const ZLMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      for (auto& [k, c] : m.at(i, j).terms()) {
        (void)c;
        if (k.second != 0 || k.first < 0 || k.first % 4 != 0) return false;
      }
  return true;
}

Mat zl_constant_term(const ZLMat& m) {
  Mat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).coeff(0, 0);
  return r;
}

ZLMat zl_negate_z(const ZLMat& m) {
  ZLMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      ZLPoly p;
      for (auto& [k, c] : m.at(i, j).terms()) {
        if (k.second != 0 || k.first % 4 != 0)
          throw std::domain_error("substitution needs integer powers of z");
        int zp = k.first / 4;
        SymExpr cc = (zp % 2 == 0) ? c : -c;
        p = p + cc * ZLPoly::zpow4(k.first);
      }
      r.at(i, j) = p;
    }
  return r;
}

}  // namespace mono
