#pragma once

#include "sle/spectrum.hpp"

namespace sle {

struct XY {
  double x = 0.0;
  double y = 0.0;
};

// Sector S_k: p < (4+k)^2/8k and 1 + 2k(p - q) > 0.
bool in_sector(double p, double q, double kappa);

// x = sqrt((4+k)^2 - 8kp), y = sqrt(1 + 2k(p - q)); DomainError off S_k.
XY xy_forward(double p, double q, double kappa);
PQ xy_inverse(double x, double y, double kappa);

struct XYSpectra {
  double beta_1, beta_0, beta_tip, beta_lin;
};
// The four spectra written in (x, y); y may take either sign.
XYSpectra xy_spectra(double x, double y, double kappa);

// 4(y - k/4)^2 - (x - k/2)^2 + 6(k + 2), relative to its term sizes.
double quartic_hyperbola_residual(double x, double y, double kappa);

// Branches of the hyperbola over y: x = k/2 +- sqrt(4(y - k/4)^2 + 6(k+2)).
double hyperbola_x(double y, double kappa, bool upper);

struct QuarticAsymptotes {
  // linear asymptote of the pulled-back quartic: q = slope p + intercept
  double slope = 0.0;
  double intercept = 0.0;
  // hyperbola centre and asymptote slopes dx/dy = +-2 in (x, y)
  double center_x = 0.0;
  double center_y = 0.0;
  // parabolic asymptote (2p - q - 1/4)^2 - k(p - q)/2 = c
  double parabola_c = 0.0;
  // whether the x_- component reaches the spectrum sector (y >= 0 part)
  bool lower_component_relevant = false;
};
QuarticAsymptotes quartic_asymptotes(double kappa, int m = 1);

// Left side of the parabolic asymptote equation at (p, q).
double parabolic_asymptote_value(double p, double q, double kappa);

}  // namespace sle
