#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "mono/rational.hpp"
#include "mono/symbols.hpp"
#include "mono/symexpr.hpp"

using namespace mono;

namespace {
SymExpr E(const std::string& s) { return SymExpr::parse(s); }
SymExpr sym(int id, int e = 1) { return SymExpr::symbol(id, e); }
}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(rat_from_string("3/6") == Rat(1, 2));
  CHECK(rat_from_string("-4/8") == Rat(-1, 2));
  CHECK(rat_from_string("+7") == Rat(7));
  CHECK(rat_to_string(rat_from_string("-22/4")) == "-11/2");
  CHECK_THROWS_AS(rat_from_string("22/-4"), std::invalid_argument);
  CHECK(rat_is_integer(rat_from_string("8/4")));
  CHECK(rat_to_long(rat_from_string("8/4")) == 2);
  CHECK_FALSE(rat_is_integer(Rat(1, 3)));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("gaussian rational arithmetic") {
  GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(-1));
  GaussRat z(Rat(1, 2), Rat(-3, 4));
  CHECK(z * z.inverse() == GaussRat(1));
  CHECK(z + z.conj() == GaussRat(Rat(1)));
  CHECK_THROWS_AS(GaussRat().inverse(), std::domain_error);
}

TEST_CASE("table rewrite rules") {
  SymExpr s2 = sym(SymbolTable::S2);
  SymExpr spi = sym(SymbolTable::SPI);
  SymExpr g14 = sym(SymbolTable::G14);
  SymExpr g34 = sym(SymbolTable::G34);
  SymExpr pi = sym(SymbolTable::PI);
  SymExpr c12 = sym(SymbolTable::C12);
  SymExpr c = sym(SymbolTable::C);

  CHECK(s2 * s2 == SymExpr(2));
  CHECK(s2.pow(3) == SymExpr(2) * s2);
  CHECK(spi * spi == pi);
  CHECK(g14 * g34 == s2 * pi);
  CHECK(c12 * c12 == c);
  // Laurent exponents are reduced through the same rules
  CHECK(s2.pow(-2) == SymExpr(Rat(1, 2)));
  CHECK(c12.pow(-1) * c12 == SymExpr(1));
  CHECK(c12.pow(-1) == c12 * c.pow(-1));
  CHECK(g14.pow(2) * g34.pow(2) == SymExpr(2) * pi * pi);
  SymbolTable::instance().selfcheck();
}

TEST_CASE("expression arithmetic") {
  SymExpr pi = sym(SymbolTable::PI);
  SymExpr x = SymExpr(2) + SymExpr::i() * pi;
  SymExpr y = SymExpr(2) - SymExpr::i() * pi;
  CHECK(x * y == SymExpr(4) + pi * pi);
  CHECK(x - x == SymExpr(0));
  CHECK((x - x).is_zero());
  CHECK(x.pow(0).is_one());
  CHECK(x.pow(2) == x * x);
  CHECK((SymExpr(1) / (SymExpr(2) * pi)) * (SymExpr(2) * pi) == SymExpr(1));
}

TEST_CASE("single-term inverse and its limits") {
  SymExpr pi = sym(SymbolTable::PI);
  SymExpr t = SymExpr(Rat(-3, 7)) * pi.pow(2) * sym(SymbolTable::GAMMA);
  CHECK((t.inverse() * t).is_one());
  CHECK_THROWS_AS((SymExpr(1) + pi).inverse(), std::domain_error);
  CHECK_THROWS_AS(SymExpr(0).inverse(), std::domain_error);
}

TEST_CASE("parser round trips") {
  for (const char* text : {
           "(-1/3)*i*pi^3",
           "2 + 3/4*i",
           "1/2*s2 - 1/2*i*s2",
           "gamma^4 - 96*gamma*zeta3 + pi^4",
           "c12*pi^-2",
           "7",
           "0",
           "-i",
       }) {
    SymExpr e = E(text);
    CHECK(SymExpr::parse(e.str()) == e);
  }
  // printable form is stable under reparsing
  SymExpr e = E("(4*gamma+i*pi)/(2*c12*pi^2)");
  CHECK(SymExpr::parse(e.str()) == e);
}

TEST_CASE("parser grammar corners") {
  CHECK(E("3/4") == SymExpr(Rat(3, 4)));
  CHECK(E("i*i") == SymExpr(-1));
  CHECK(E("2^3") == SymExpr(8));
  CHECK(E("pi^-1") * E("pi") == SymExpr(1));
  CHECK(E("(1+pi)*(1-pi)") == SymExpr(1) - E("pi^2"));
  CHECK(E(" 1 + 2 ") == SymExpr(3));
  CHECK_THROWS_AS(E("1+*2"), std::invalid_argument);
  CHECK_THROWS_AS(E("(1"), std::invalid_argument);
  CHECK_THROWS_AS(E("1)"), std::invalid_argument);
  CHECK_THROWS_AS(E(""), std::invalid_argument);
  CHECK_THROWS_AS(E("2/0"), std::invalid_argument);
}

TEST_CASE("free symbols register on parse") {
  SymExpr v = E("v");
  int vid = SymbolTable::instance().id("v");
  CHECK(v == SymExpr::symbol(vid));
  CHECK(SymbolTable::instance().add("v", std::nullopt) == vid);
}

TEST_CASE("substitution") {
  SymExpr v = E("v");
  int vid = SymbolTable::instance().id("v");
  SymExpr e = v * v - SymExpr(6) * v + SymExpr(1);
  CHECK(e.subst(vid, SymExpr(6)) == SymExpr(1));
  CHECK(e.subst(vid, SymExpr(0)) == SymExpr(1));
  SymExpr pi = sym(SymbolTable::PI);
  CHECK((v.pow(-1)).subst(vid, SymExpr(2) * pi) ==
        SymExpr(Rat(1, 2)) * pi.pow(-1));
}

TEST_CASE("numeric evaluation") {
  SymExpr pi = sym(SymbolTable::PI);
  CHECK(std::abs(pi.eval() - std::complex<double>(M_PI)) < 1e-15);
  CHECK(std::abs(E("s2").eval() - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(E("spi^2").eval() - M_PI) < 1e-14);
  CHECK(std::abs(E("g14*g34").eval() - std::sqrt(2.0 * M_PI) * std::sqrt(M_PI) *
                                            std::sqrt(2.0) / std::sqrt(2.0)) <
        1e-12);
  int vid = SymbolTable::instance().add("v", std::nullopt);
  SymExpr v = SymExpr::symbol(vid);
  CHECK(std::abs((v * v).eval({{vid, {3.0, 0.0}}}) - 9.0) < 1e-15);
  CHECK_THROWS(v.eval());
}

TEST_CASE("roots of unity with denominator four") {
  CHECK(exp_i_pi_rational(Rat(0)) == SymExpr(1));
  CHECK(exp_i_pi_rational(Rat(1)) == SymExpr(-1));
  CHECK(exp_i_pi_rational(Rat(2)) == SymExpr(1));
  CHECK(exp_i_pi_rational(Rat(1, 2)) == SymExpr::i());
  CHECK(exp_i_pi_rational(Rat(-1, 2)) == -SymExpr::i());
  SymExpr s2 = sym(SymbolTable::S2);
  SymExpr eighth = exp_i_pi_rational(Rat(1, 4));
  CHECK(eighth == SymExpr(GaussRat(Rat(1, 2), Rat(1, 2))) * s2);
  CHECK(eighth.pow(8).is_one());
  CHECK(eighth * exp_i_pi_rational(Rat(-1, 4)) == SymExpr(1));
  CHECK_THROWS_AS(exp_i_pi_rational(Rat(1, 3)), std::domain_error);
}

TEST_CASE("eighth roots multiply consistently") {
  for (long a = -8; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b) {
      SymExpr lhs = exp_i_pi_rational(Rat(a, 4)) * exp_i_pi_rational(Rat(b, 4));
      SymExpr rhs = exp_i_pi_rational(Rat(a + b, 4));
      CHECK(lhs == rhs);
    }
}
