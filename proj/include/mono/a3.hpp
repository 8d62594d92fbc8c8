#pragma once

#include <array>
#include <complex>

#include "mono/chambers.hpp"
#include "mono/monodromy.hpp"

namespace mono {

// Point of the quartic family f(x) = x^4 + a2 x^2 + a1 x + a0, addressed
// in the flat coordinates t of the associated three-dimensional manifold.
struct A3Point {
  std::complex<double> t1{}, t2{}, t3{};

  std::complex<double> a0() const { return t1 + t3 * t3 / 8.0; }
  std::complex<double> a1() const { return t2; }
  std::complex<double> a2() const { return t3; }
};

struct A3CriticalData {
  std::array<std::complex<double>, 3> x;  // critical points of f
  std::array<std::complex<double>, 3> u;  // critical values f(x_i)
};

// Critical points from the closed cubic formula (principal square and cube
// roots), refined residual below 1e-9 relative. Throws domain_error near
// the degenerate locus a2 = 0 or 27 a1^2 + 8 a2^3 = 0.
A3CriticalData critical_data(const A3Point& p);

// Euler multiplication on the flat basis at p.
NumMat a3_u_matrix(const A3Point& p);

// Eigenframe matrix: rows indexed by critical points, columns by the flat
// basis. Satisfies Psi^T Psi = eta and Psi U Psi^{-1} = diag(u) at every
// nondegenerate point; square-root branches fixed so the matrix is
// continuous in a neighborhood of the positive real a2 axis.
NumMat psi_matrix_a3(const A3Point& p);

Mat a3_eta();
Mat a3_mu();

// Data in the natural labeling (u1, u2, u3) with u2 = u3; S is lower
// triangular there.
MonodromyData a3_natural();

// Tabulated data per band of arg h (0..4, one band per quarter turn
// starting at -pi/4) and per cell (1 or 2) of the half-plane split.
MonodromyData a3_reference(int band, int cell);

// Word carrying band-0 cell-1 data to the given band and cell; cell 2
// appends the single cell-switch letter of that band.
BraidWord a3_band_word(int band, int cell = 1);

// Piecewise-linear quarter-turn deformation of the split configuration
// (0, -e^{2 i theta}/4 +- offset); tracking it yields the word 1 2 1.
TrackInput a3_split_track();

// Verifies every tabulated band/cell row against the braid calculus, the
// cell-switch letters, the constraint set, the rotation shift, the Coxeter
// form of the natural S, and the vanishing entries at the coalescing pair.
Report reproduce_a3_table();

}  // namespace mono
