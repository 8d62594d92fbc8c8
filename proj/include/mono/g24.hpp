#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "mono/chambers.hpp"
#include "mono/monodromy.hpp"
#include "mono/zl.hpp"

namespace mono {

// Cohomology class of the Grassmannian of planes in four-space, written in
// the basis (1, s1, s2, s11, s21, s22) with half-degrees (0, 1, 2, 2, 3, 4).
// Products truncate above the top degree.
struct CohClass {
  std::array<SymExpr, 6> a{};

  static CohClass unit();
  static CohClass basis(int k);  // 0..5

  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass operator*(const SymExpr& s) const;
  bool operator==(const CohClass& o) const;
  bool operator!=(const CohClass& o) const { return !(*this == o); }
  bool is_zero() const;
  std::string str() const;
};

CohClass cup(const CohClass& x, const CohClass& y);
CohClass cup_pow(const CohClass& x, int k);
// Exponential of a class with zero scalar part (truncation makes it finite).
CohClass cup_exp(const CohClass& x);
// Inverse of a class with invertible (single-term) scalar part.
CohClass cup_inverse(const CohClass& x);
// Matrix of x cup (-) acting on the basis, columns = images.
Mat cup_matrix(const CohClass& x);
// Component of pure half-degree k (0..4).
CohClass degree_part(const CohClass& x, int k);

// Power sums of the Chern roots, k = 1..4: of the rank-two dual
// tautological bundle, and of the tangent bundle built from it.
CohClass power_sum_dual_taut(int k);
CohClass power_sum_tangent(int k);

// Characters of the six Schur-functor bundles of the dual tautological
// bundle, in the order (0, (1), (2), (1,1), (2,1), (2,2)). The weight w
// scales the Chern roots: 2 pi i for the normalized morphism, 1 for Euler
// pairings, negated for duals.
CohClass chern_character(int lambda, const SymExpr& w);
CohClass chern_character(int lambda);  // w = 2 pi i

// Multiplicative class of the tangent bundle from the log-Gamma series;
// sign = +1 or -1 picks the sign of the series argument.
CohClass gamma_class(int sign);

// Todd class of the tangent bundle, and the Euler pairing matrix of the
// six bundles (integral normalized so the pairing is integer-valued).
std::pair<CohClass, Mat> todd_and_gram();

// Matrix of the morphism bundle -> gamma-weighted character, columns in
// the bundle order above, rows in the cohomology basis.
Mat c_kap(int sign);

// For a truncated series F = 1 + f1 t + f2 t^2 + f3 t^3 + f4 t^4: the
// multiplicative class Fhat of the tangent bundle (dual = cotangent), and
// the unique class lambda_F with Fhat(T) cup lambda_F = Fhat(T*).
CohClass fhat_class(const std::array<SymExpr, 4>& f, bool dual);
CohClass hirzebruch_lambda(const std::array<SymExpr, 4>& f);

// Member of the gauge group at (eta, mu, R) below from its three free
// parameters; the remaining two entries are forced by the group equations.
Mat c0_member_g24(const SymExpr& a1, const SymExpr& a2, const SymExpr& a4);

// Fixed data. v is the undetermined parameter of the connection fixture;
// pass the free symbol "v" to keep it symbolic.
Mat g24_eta();
Mat g24_mu();
Mat g24_r();
Mat g24_s(const SymExpr& v);
Mat g24_c(const SymExpr& v);
// Eigenframe at symbolic q; the symbol q4 carries q^{1/4}.
Mat g24_psi();
// Multiplication by lambda s1 + m s11 in the deformed ring.
Mat quantum_mult_matrix(const SymExpr& lambda, const SymExpr& m, const SymExpr& q);
std::vector<std::complex<double>> canonical_small(std::complex<double> q);
Mat g24_gauge_a();
Mat g24_gauge_b();
Mat g24_s_kap();
Mat g24_g_kap();
Mat g24_c_kap_minus();
// Tabulated band matrices, k = 0..8.
Mat g24_band_h(int k);
// Words connecting consecutive bands, cumulative to band k (1..8).
BraidWord g24_band_word(int k);
// Truncated solution series at the origin (polynomial in z), and the
// tabulated result of conjugating it into the flat frame.
ZLMat g24_levelt_series();
ZLMat g24_levelt_display();

// Assembled tuple at v = 6 with the coalescent canonical coordinates.
MonodromyData g24_reference();

Report psi_check_g24();
Report identity_in_v();
Rat solve_v();
Report verify_resultg24();
Report band_table();
Report levelt_conjugation_check();

// Piecewise-linear rotation sweeping the first band boundaries (bands = 1
// or 2) after splitting the coalescing pair; tracking it yields the
// connecting words.
TrackInput g24_band_track(int bands);

}  // namespace mono
