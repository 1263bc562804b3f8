#include "sle/xy_geometry.hpp"

#include <cmath>

#include "sle/errors.hpp"

namespace sle {

namespace {
double sq(double x) { return x * x; }
}  // namespace

bool in_sector(double p, double q, double k) {
  return p < sq(4.0 + k) / (8.0 * k) && 1.0 + 2.0 * k * (p - q) > 0.0;
}

XY xy_forward(double p, double q, double k) {
  if (!in_sector(p, q, k)) throw DomainError("(p, q) outside the sector S_kappa");
  return {std::sqrt(sq(4.0 + k) - 8.0 * k * p), std::sqrt(1.0 + 2.0 * k * (p - q))};
}

PQ xy_inverse(double x, double y, double k) {
  double a = sq(4.0 + k) - x * x;
  return {a / (8.0 * k), (4.0 + a - 4.0 * y * y) / (8.0 * k)};
}

XYSpectra xy_spectra(double x, double y, double k) {
  PQ pq = xy_inverse(x, y, k);
  XYSpectra s;
  s.beta_1 = 3.0 * pq.p - 2.0 * pq.q - 0.5 - 0.5 * y;
  s.beta_0 = -pq.p + (4.0 + k) / (4.0 * k) * (4.0 + k - x);
  s.beta_tip = -pq.p - 1.0 + 0.25 * (4.0 + k - x);
  s.beta_lin = pq.p - sq(4.0 + k) / (16.0 * k);
  return s;
}

double quartic_hyperbola_residual(double x, double y, double k) {
  double a = 4.0 * sq(y - 0.25 * k), b = sq(x - 0.5 * k), c = 6.0 * (k + 2.0);
  return (a - b + c) / (a + b + c);
}

double hyperbola_x(double y, double k, bool upper) {
  double r = std::sqrt(4.0 * sq(y - 0.25 * k) + 6.0 * (k + 2.0));
  return upper ? 0.5 * k + r : 0.5 * k - r;
}

QuarticAsymptotes quartic_asymptotes(double k, int m) {
  if (m == 0) throw DomainError("m-fold transform needs m != 0");
  QuarticAsymptotes a;
  a.slope = m + 1.0;
  a.intercept = -m * (2.0 + k) / 8.0;
  a.center_x = 0.5 * k;
  a.center_y = 0.25 * k;
  a.parabola_c = 5.0 / 8.0 + 3.0 * k / 16.0;
  // x_-(k/4) = k/2 - sqrt(6(k+2)) > 0  <=>  k > 12 + 8 sqrt 3
  a.lower_component_relevant = hyperbola_x(0.25 * k, k, false) > 0.0;
  return a;
}

double parabolic_asymptote_value(double p, double q, double k) {
  return sq(2.0 * p - q - 0.25) - 0.5 * k * (p - q);
}

}  // namespace sle
