#pragma once

#include <complex>
#include <vector>

#include "mono/monodromy.hpp"

namespace mono {

// Ray attached to an ordered pair of canonical coordinates; angle is the
// argument of -i * conj(u_i - u_j).
struct StokesRay {
  int i = 0, j = 0;  // 1-based, i != j
  double angle = 0.0;
};

std::vector<StokesRay> stokes_rays(const std::vector<std::complex<double>>& u,
                                   double tol = 1e-12);

// The admissibility of a reference line of direction phi: no ray may lie
// on it (in either direction).
bool is_admissible(const std::vector<std::complex<double>>& u, double phi,
                   double tol = 1e-9);

struct LexOrder {
  std::vector<int> order;              // 1-based indices, increasing projection
  std::vector<std::vector<int>> ties;  // groups of equal projection
};

// Order along the line: projection Re(u e^{i phi}) increasing, ties broken
// by original index and reported.
LexOrder lexicographic_order(const std::vector<std::complex<double>>& u,
                             double phi, double tol = 1e-9);

// Reads the braid word off a piecewise-linear deformation of u. Crossings
// must involve adjacent strands; simultaneous crossings are accepted only
// for disjoint strand pairs (emitted in ascending slot order).
BraidWord track_braid(const std::vector<std::vector<std::complex<double>>>& samples,
                      double phi, double tol = 1e-9);

struct TrackInput {
  double phi = 0.0;
  std::vector<std::vector<std::complex<double>>> samples;
};

TrackInput track_input_from_json(const std::string& text);
std::string track_input_to_json(const TrackInput& in);

}  // namespace mono
