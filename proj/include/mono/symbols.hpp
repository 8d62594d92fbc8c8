#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mono/rational.hpp"

namespace mono {

// Multiplicative generators of the coefficient ring. The first nine are
// built in; further free symbols (polynomial indeterminates) may be added
// at runtime. Laurent exponents are allowed everywhere.
//
// Rewrite rules (applied to monomials, confluent and terminating):
//   s2^2   -> 2
//   spi^2  -> pi
//   g14*g34 -> s2*pi
//   c12^2  -> c
struct SymbolTable {
  enum Builtin : int {
    PI = 0,
    GAMMA = 1,
    ZETA3 = 2,
    S2 = 3,
    SPI = 4,
    G14 = 5,
    G34 = 6,
    C12 = 7,
    C = 8,
  };

  static SymbolTable& instance();

  int id(const std::string& name) const;
  const std::string& name(int id) const { return names_.at(id); }
  int size() const { return static_cast<int>(names_.size()); }

  // Registers a free symbol (idempotent if name and value agree).
  int add(const std::string& name, std::optional<std::complex<double>> value);

  std::optional<std::complex<double>> value(int id) const { return values_.at(id); }

  // Exhaustively checks the rewrite system: termination measure and
  // uniqueness of normal forms on all critical overlaps. Called once at
  // startup; throws std::logic_error on failure.
  void selfcheck() const;

 private:
  SymbolTable();
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::optional<std::complex<double>>> values_;
};

// Monomial over the symbol table: sorted (symbol, exponent) pairs,
// exponents nonzero (possibly negative).
struct Monomial {
  std::vector<std::pair<int, int>> e;

  static Monomial one() { return {}; }
  static Monomial sym(int id, int exp = 1) {
    Monomial m;
    if (exp != 0) m.e.push_back({id, exp});
    return m;
  }

  bool trivial() const { return e.empty(); }
  int exponent(int id) const;

  Monomial operator*(const Monomial& o) const;

  auto operator<=>(const Monomial& o) const = default;
};

// A monomial together with the rational scale produced by rewriting.
struct ScaledMonomial {
  GaussRat scale;
  Monomial m;
};

// Canonical form of a raw monomial under the rewrite rules. Exponents of
// s2, spi, c12 are reduced into {0,1}; g14 and g34 never appear with
// strictly positive (or strictly negative) exponent simultaneously.
ScaledMonomial normalize_monomial(const Monomial& raw);

}  // namespace mono
