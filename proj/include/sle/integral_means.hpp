#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sle/batch.hpp"

namespace sle {

struct MeansScan {
  std::vector<double> radii;
  std::vector<double> integrals;  // trapezoid over theta in [0, 2 pi)
  std::optional<double> beta;     // empty when tip-dominated
  bool tip_dominated = false;
};

// 1 - 10^-k for k evenly spaced in [k_lo, k_hi].
std::vector<double> default_radii(int count = 26, double k_lo = 0.5, double k_hi = 3.0);

// Least-squares slope of log(integral) against -log(1 - r) over the top
// half of the grid.
double fit_means_slope(std::span<const double> radii, std::span<const double> integrals);

MeansScan integral_means_scan(const std::function<double(cplx)>& integrand,
                              std::span<const double> radii, int angular_M);

// Integrand |closed_two_point(z, conj z)| / |z|^q; (p, q) must lie on the
// parabola (DomainError otherwise). 2 gamma <= -1 reports tip-dominated.
MeansScan integral_means_scan_closed(double kappa, double p, double q,
                                     std::span<const double> radii, int angular_M);

// Monte Carlo integrand Ê|z|^q|f'|^p/|f|^q on a batch whose points are
// laid out radius-major: radii.size() circles of angular_M points each.
MeansScan integral_means_scan_mc(const SampleBatch& b, double p, double q,
                                 std::span<const double> radii, int angular_M);

// Point layout expected by integral_means_scan_mc.
std::vector<cplx> means_scan_points(std::span<const double> radii, int angular_M);

}  // namespace sle
