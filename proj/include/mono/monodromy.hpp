#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "mono/report.hpp"
#include "mono/symmatrix.hpp"

namespace mono {

// Word in the braid generators: letters are +-k with 1 <= k <= n-1; a
// positive letter acts on strands k, k+1. Letters apply left to right.
struct BraidWord {
  std::vector<int> letters;

  static BraidWord parse(const std::string& text);
  std::string str() const;
  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& o) const;
};

// Exact monodromy tuple. u carries the numeric canonical coordinates when
// known; it may be empty.
struct MonodromyData {
  int n = 0;
  Mat mu, r, eta, s, c;
  std::vector<std::complex<double>> u;

  static MonodromyData from_json(const std::string& text);
  std::string to_json() const;
};

Mat exp_pi_i_mu(const Mat& mu, const Rat& mult);  // e^{mult pi i mu}
Mat exp_pi_i_r(const Mat& r, const Rat& mult);    // e^{mult pi i R}
Mat m0_matrix(const Mat& mu, const Mat& r);       // e^{2 pi i mu} e^{2 pi i R}
Mat eta_inverse(const Mat& eta);

// Support of R graded by positive-integer jumps of mu, with the signed
// transpose symmetry wrt eta in each degree.
bool g_eta_mu_membership(const Mat& r, const Mat& mu, const Mat& eta,
                         std::string* why = nullptr);

// Pure gauge transformations: z^mu z^R G z^{-R} z^{-mu} is polynomial in z
// with value I at 0, preserves eta under the signed pairing, and G
// commutes with R.
bool c0_membership(const Mat& g, const Mat& mu, const Mat& r, const Mat& eta,
                   std::string* why = nullptr);

// Shapes, eta/mu structure, unit diagonal of S, algebra membership, and
// the three identities coupling C, S, eta, mu, R.
Report check_constraints(const MonodromyData& d);

// Elementary braid move matrix acting on strands i, i+1 (1-based i,
// sign -1 for the inverse move); built from the current S.
Mat braid_matrix(const Mat& s, int i, int sign);
Mat braid_matrix_inverse(const Mat& s, int i, int sign);

// S -> A S A^T and C -> C A^{-1} per letter; requires S unitriangular.
MonodromyData apply_braid(const MonodromyData& d, const BraidWord& w);

// Relabeling by tau (1-based images): S -> P S P^{-1}, C -> C P^{-1},
// u_k -> u_{tau(k)}.
MonodromyData apply_permutation(const MonodromyData& d, const std::vector<int>& tau);

// J = diag(signs): S -> J S J, C -> C J.
MonodromyData apply_signs(const MonodromyData& d, const std::vector<int>& signs);

// Left gauge action on the solution frame: C -> G C.
MonodromyData apply_gauge(const MonodromyData& d, const Mat& g);

// C -> M0^{-k} C, everything else fixed. k = 1 is one full
// counterclockwise rotation of the reference line.
MonodromyData apply_shift(const MonodromyData& d, int k);

// Word (1 2 ... n-1) repeated n times; acting with it leaves S fixed and
// multiplies C by M0^{-1} on the left.
BraidWord center_braid(int n);

// True iff S_ij = S_ji = 0 for every pair i != j with |u_i - u_j| <= tol.
bool coalescence_vanishing_check(const Mat& s,
                                 const std::vector<std::complex<double>>& u,
                                 double tol);

}  // namespace mono
