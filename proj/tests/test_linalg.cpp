#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <random>

#include "mono/symmatrix.hpp"
#include "mono/zl.hpp"

using namespace mono;

namespace {
SymExpr E(const std::string& s) { return SymExpr::parse(s); }
}  // namespace

TEST_CASE("construction and access") {
  Mat m = Mat::from_longs({{1, 2}, {3, 4}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
  CHECK(m.at(1, 0) == SymExpr(3));
  CHECK(m.transpose().at(0, 1) == SymExpr(3));
  CHECK(Mat::identity(3) == Mat::diag({SymExpr(1), SymExpr(1), SymExpr(1)}));
  CHECK((m - m).is_zero());
  CHECK(-m + m == Mat(2, 2));
  CHECK_THROWS_AS(Mat::from_longs({{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(m * Mat::identity(3), std::invalid_argument);
}

TEST_CASE("scalar multiple and products") {
  Mat m = Mat::from_longs({{0, 1}, {1, 0}});
  CHECK(SymExpr(2) * m == m + m);
  CHECK(m * m == Mat::identity(2));
  Mat a = Mat::from_longs({{1, 2}, {3, 4}});
  Mat b = Mat::from_longs({{5, 6}, {7, 8}});
  CHECK((a * b).at(0, 0) == SymExpr(19));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
}

TEST_CASE("determinant") {
  CHECK(det_leibniz(Mat::identity(4)) == SymExpr(1));
  CHECK(det_leibniz(Mat::from_longs({{1, 2}, {3, 4}})) == SymExpr(-2));
  CHECK(det_leibniz(Mat::from_longs({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) ==
        SymExpr(30));
  Mat p = permutation_matrix({2, 1, 3});
  CHECK(det_leibniz(p) == SymExpr(-1));
  Mat v = Mat::from_rows({{SymExpr(1), E("pi")}, {E("pi"), E("pi^2")}});
  CHECK(det_leibniz(v).is_zero());
}

TEST_CASE("exact inverse") {
  Mat a = Mat::from_rows({{SymExpr(1), SymExpr::i()}, {SymExpr(0), SymExpr(2)}});
  CHECK(a * inverse_rational(a) == Mat::identity(2));
  CHECK(inverse_rational(a) * a == Mat::identity(2));
  Mat sing = Mat::from_longs({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(inverse_rational(sing), std::domain_error);
  Mat nonconst = Mat::from_rows({{E("pi"), SymExpr(0)}, {SymExpr(0), SymExpr(1)}});
  CHECK_THROWS_AS(inverse_rational(nonconst), std::domain_error);
}

TEST_CASE("monomial inverse handles symbolic scales") {
  Mat m(3, 3);
  m.at(0, 1) = E("2*pi");
  m.at(1, 2) = E("i*s2");
  m.at(2, 0) = E("c12^-1");
  CHECK(m * monomial_inverse(m) == Mat::identity(3));
  CHECK(monomial_inverse(m) * m == Mat::identity(3));
  Mat bad(2, 2);
  bad.at(0, 0) = SymExpr(1);
  bad.at(0, 1) = SymExpr(1);
  bad.at(1, 0) = SymExpr(1);
  CHECK_THROWS_AS(monomial_inverse(bad), std::domain_error);
  CHECK_THROWS_AS(monomial_inverse(Mat(2, 2)), std::domain_error);
}

TEST_CASE("nilpotent exponential") {
  Mat n = Mat::from_longs({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}});
  Mat e = matrix_exp_nilpotent(n);
  CHECK(e.at(0, 1) == SymExpr(1));
  CHECK(e.at(0, 2) == SymExpr(Rat(3, 2)));
  CHECK(e.at(1, 2) == SymExpr(1));
  CHECK(e.at(0, 0) == SymExpr(1));
  Mat ni = matrix_exp_nilpotent(-n);
  CHECK(e * ni == Mat::identity(3));
  CHECK_THROWS_AS(matrix_exp_nilpotent(Mat::identity(2)), std::domain_error);
}

TEST_CASE("shape predicates") {
  Mat u = Mat::from_longs({{1, 5}, {0, 1}});
  CHECK(is_upper_unitriangular(u));
  CHECK_FALSE(is_upper_unitriangular(u.transpose()));
  CHECK_FALSE(is_upper_unitriangular(Mat::from_longs({{2, 0}, {0, 1}})));
  CHECK(is_diagonal(Mat::diag({E("pi"), SymExpr(0)})));
  CHECK_FALSE(is_diagonal(u));
}

TEST_CASE("permutation conjugation convention") {
  // entry (k, tau(k)) of the matrix is one, so conjugation pulls
  // S_{tau(a) tau(b)} into slot (a, b)
  std::vector<int> tau = {3, 1, 2};
  Mat p = permutation_matrix(tau);
  Mat s = Mat::from_longs({{11, 12, 13}, {21, 22, 23}, {31, 32, 33}});
  Mat t = p * s * p.transpose();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(t.at(a, b) == s.at(tau[a] - 1, tau[b] - 1));
  CHECK(p * p.transpose() == Mat::identity(3));
  CHECK_THROWS_AS(permutation_matrix({1, 1, 3}), std::invalid_argument);
}

TEST_CASE("substitution into matrices") {
  int vid = SymbolTable::instance().add("v", std::nullopt);
  Mat m = Mat::from_rows({{SymExpr::symbol(vid), SymExpr(1)},
                          {SymExpr(0), SymExpr::symbol(vid, 2)}});
  Mat m6 = subst_matrix(m, vid, SymExpr(6));
  CHECK(m6.at(0, 0) == SymExpr(6));
  CHECK(m6.at(1, 1) == SymExpr(36));
  CHECK(m6.at(0, 1) == SymExpr(1));
}

TEST_CASE("numeric evaluation against a dense oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int rep = 0; rep < 10; ++rep) {
    Mat a(4, 4), b(4, 4);
    Eigen::MatrixXcd ea(4, 4), eb(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        int x = d(rng), y = d(rng);
        a.at(i, j) = SymExpr(Rat(x, 2)) + SymExpr::i() * SymExpr(y);
        ea(i, j) = std::complex<double>(x / 2.0, y);
        x = d(rng);
        y = d(rng);
        b.at(i, j) = SymExpr(x) * E("pi") + SymExpr(Rat(y, 3));
        eb(i, j) = std::complex<double>(x * M_PI + y / 3.0, 0.0);
      }
    NumMat prod = eval_matrix(a * b);
    Eigen::MatrixXcd eprod = ea * eb;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(std::abs(prod[i][j] - eprod(i, j)) < 1e-9);
  }
}

TEST_CASE("laurent terms in the fourth root and the logarithm") {
  ZLPoly z = ZLPoly::zpow4(4);
  ZLPoly l = ZLPoly::logz();
  ZLPoly p = z * z + SymExpr(3) * l + ZLPoly(SymExpr(5));
  CHECK(p.coeff(8, 0) == SymExpr(1));
  CHECK(p.coeff(0, 1) == SymExpr(3));
  CHECK(p.coeff(0, 0) == SymExpr(5));
  CHECK(p.coeff(4, 0).is_zero());
  CHECK(p.shifted(-8, 0).coeff(0, 0) == SymExpr(1));
  CHECK((l * l) == ZLPoly::logz(2));
  CHECK((z - z).is_zero());
  CHECK(ZLPoly::zpow4(2) * ZLPoly::zpow4(-2) == ZLPoly(SymExpr(1)));
}

TEST_CASE("matrix forms with fractional powers") {
  ZLMat m = ZLMat::identity(2);
  m.at(0, 1) = ZLPoly::zpow4(1);
  ZLMat sq = m * m;
  CHECK(sq.at(0, 1) == SymExpr(2) * ZLPoly::zpow4(1));
  CHECK(sq.at(0, 0) == ZLPoly(SymExpr(1)));
  CHECK(m.transpose().at(1, 0) == ZLPoly::zpow4(1));
  CHECK(ZLMat::from(Mat::identity(2)) == ZLMat::identity(2));
}

TEST_CASE("diagonal extraction") {
  Mat d = Mat::diag({SymExpr(Rat(-3, 4)), SymExpr(Rat(1, 4))});
  auto v = diagonal_rationals(d);
  CHECK(v == std::vector<Rat>{Rat(-3, 4), Rat(1, 4)});
  CHECK_THROWS_AS(diagonal_rationals(Mat::from_longs({{0, 1}, {0, 0}})),
                  std::domain_error);
  Mat c = Mat::diag({SymExpr::i(), SymExpr(1)});
  CHECK_THROWS_AS(diagonal_rationals(c), std::domain_error);
}

TEST_CASE("entrywise power sandwich") {
  ZLMat m = ZLMat::identity(2);
  m.at(0, 1) = ZLPoly(SymExpr(1));
  std::vector<Rat> mu = {Rat(1, 4), Rat(3, 4)};
  ZLMat plus = zl_zmu_sandwich(m, mu, 1);
  CHECK(plus.at(0, 1) == ZLPoly::zpow4(-2));
  CHECK(plus.at(0, 0) == ZLPoly(SymExpr(1)));
  ZLMat minus = zl_zmu_sandwich(m, mu, -1);
  CHECK(minus.at(0, 1) == ZLPoly::zpow4(2));
  CHECK_THROWS_AS(zl_zmu_sandwich(m, {Rat(1, 3), Rat(0)}, 1),
                  std::domain_error);
}

TEST_CASE("conjugation by the diagonal power with a log block") {
  Mat mu = Mat::diag({SymExpr(0), SymExpr(1)});
  Mat r = Mat::from_longs({{0, 0}, {1, 0}});
  Mat g = Mat::diag({SymExpr(1), SymExpr(2)});
  ZLMat out = conj_by_zpow(g, mu, r);
  CHECK(out.at(0, 0) == ZLPoly(SymExpr(1)));
  CHECK(out.at(1, 1) == ZLPoly(SymExpr(2)));
  CHECK(out.at(0, 1).is_zero());
  // commutator term lands in the lower corner with one log and one power of z
  CHECK(out.at(1, 0).coeff(4, 1) == SymExpr(-1));
  // with vanishing exponent matrices this is the identity conjugation
  ZLMat plain = conj_by_zpow(g, Mat::diag({SymExpr(0), SymExpr(0)}), Mat(2, 2));
  CHECK(plain == ZLMat::from(g));
}

TEST_CASE("polynomial recognition and constant term") {
  ZLMat m = ZLMat::identity(2);
  m.at(0, 1) = ZLPoly::zpow4(8);
  CHECK(zl_is_polynomial(m));
  CHECK(zl_constant_term(m) == Mat::identity(2));
  ZLMat neg = zl_negate_z(m);
  CHECK(neg.at(0, 1) == ZLPoly::zpow4(8));
  ZLMat modd = ZLMat::identity(2);
  modd.at(1, 0) = ZLPoly::zpow4(4);
  CHECK(zl_negate_z(modd).at(1, 0) == -SymExpr(1) * ZLPoly::zpow4(4));
  ZLMat frac = ZLMat::identity(2);
  frac.at(0, 1) = ZLPoly::zpow4(2);
  CHECK_FALSE(zl_is_polynomial(frac));
  CHECK_THROWS_AS(zl_negate_z(frac), std::domain_error);
  ZLMat withlog = ZLMat::identity(2);
  withlog.at(0, 1) = ZLPoly::logz();
  CHECK_FALSE(zl_is_polynomial(withlog));
  ZLMat laurent = ZLMat::identity(2);
  laurent.at(0, 1) = ZLPoly::zpow4(-4);
  CHECK_FALSE(zl_is_polynomial(laurent));
}
