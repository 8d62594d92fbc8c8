#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "mono/symbols.hpp"

namespace mono {

// Exact ring element: finite Gaussian-rational combination of normalized
// monomials. All arithmetic renormalizes, so equal values compare equal
// and printing is canonical.
class SymExpr {
 public:
  SymExpr() = default;
  SymExpr(GaussRat c);
  SymExpr(const Rat& c) : SymExpr(GaussRat(c)) {}
  SymExpr(long c) : SymExpr(GaussRat(c)) {}
  SymExpr(int c) : SymExpr(GaussRat(static_cast<long>(c))) {}

  static SymExpr symbol(int id, int exp = 1);
  static SymExpr symbol(const std::string& name, int exp = 1);
  static SymExpr i();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Rational-coefficient constant, if the expression is one.
  std::optional<GaussRat> constant_value() const;

  SymExpr operator-() const;
  SymExpr operator+(const SymExpr& o) const;
  SymExpr operator-(const SymExpr& o) const;
  SymExpr operator*(const SymExpr& o) const;
  SymExpr operator/(const SymExpr& o) const { return *this * o.inverse(); }
  SymExpr& operator+=(const SymExpr& o) { return *this = *this + o; }
  SymExpr& operator-=(const SymExpr& o) { return *this = *this - o; }
  SymExpr& operator*=(const SymExpr& o) { return *this = *this * o; }
  bool operator==(const SymExpr& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymExpr& o) const { return !(*this == o); }

  // Defined for single-term expressions only.
  SymExpr inverse() const;
  SymExpr pow(long k) const;

  // Replaces one symbol by an expression. Negative exponents require the
  // replacement to be invertible (single term).
  SymExpr subst(int id, const SymExpr& value) const;

  // Numeric evaluation; overrides take precedence over table values.
  std::complex<double> eval(
      const std::map<int, std::complex<double>>& overrides = {}) const;

  std::string str() const;
  static SymExpr parse(const std::string& text);

  const std::map<Monomial, GaussRat>& terms() const { return terms_; }

 private:
  void add_term(const GaussRat& c, const Monomial& m);
  std::map<Monomial, GaussRat> terms_;
};

inline SymExpr operator+(long a, const SymExpr& b) { return SymExpr(a) + b; }
inline SymExpr operator-(long a, const SymExpr& b) { return SymExpr(a) - b; }
inline SymExpr operator*(long a, const SymExpr& b) { return SymExpr(a) * b; }

// e^{i pi r} for rational r with denominator dividing 4, as an exact
// expression (uses s2 for the denominator-4 values).
SymExpr exp_i_pi_rational(const Rat& r);

}  // namespace mono
