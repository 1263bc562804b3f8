#pragma once

#include <string>
#include <vector>

#include "sle/spectrum.hpp"

namespace sle {

struct GridSpec {
  double p_lo = 0.0, p_hi = 0.0;
  double q_lo = 0.0, q_hi = 0.0;
  int np = 400, nq = 400;  // nodes per axis, endpoints included

  // UsageError for empty ranges or fewer than 2 nodes.
  void validate() const;
  double p_at(int i) const;
  double q_at(int j) const;
};

// [p0' - 6, p0 + 6] x [Q0.q - 6, P0.q + 6] at 400 x 400.
GridSpec default_grid(double kappa);

// Row-major over q (outer) then p: cell (i, j) at index j * np + i.
// Points are in the coordinates of the m-fold diagram.
std::vector<SpectrumPoint> phase_grid_serial(double kappa, int m, const GridSpec& g);
// OpenMP over rows; identical output to the serial version.
std::vector<SpectrumPoint> phase_grid(double kappa, int m, const GridSpec& g);

struct CurveSample {
  std::string curve;  // curve id, or the special-point name
  double param;       // curve parameter; 0 for special points
  double p;
  double q;
};

// Curves sampled across the grid window and the special points P0, P1,
// Q0, Q1, T0, T1, T2, all drawn in the m-fold diagram.
std::vector<CurveSample> phase_curves(double kappa, int m, const GridSpec& g, int samples = 201);

}  // namespace sle
