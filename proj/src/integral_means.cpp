#include "sle/integral_means.hpp"

#include <cmath>
#include <numbers>

#include "sle/closed_form.hpp"
#include "sle/errors.hpp"
#include "sle/estimators.hpp"

namespace sle {

std::vector<double> default_radii(int count, double k_lo, double k_hi) {
  std::vector<double> r(count);
  for (int i = 0; i < count; ++i) {
    double k = count == 1 ? k_lo : k_lo + (k_hi - k_lo) * i / (count - 1);
    r[i] = 1.0 - std::pow(10.0, -k);
  }
  return r;
}

namespace {

void check_radii(std::span<const double> radii) {
  if (radii.empty()) throw UsageError("empty radius grid");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw DomainError("radii must lie in (0,1)");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw UsageError("radii must be increasing");
  }
}

}  // namespace

double fit_means_slope(std::span<const double> radii, std::span<const double> integrals) {
  const std::size_t n = radii.size();
  const std::size_t lo = n / 2;
  if (n - lo < 2) throw UsageError("slope fit needs at least 4 radii");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double m = static_cast<double>(n - lo);
  for (std::size_t i = lo; i < n; ++i) {
    double x = -std::log(1.0 - radii[i]);
    double y = std::log(integrals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

MeansScan integral_means_scan(const std::function<double(cplx)>& integrand,
                              std::span<const double> radii, int angular_M) {
  check_radii(radii);
  if (angular_M < 4) throw UsageError("angular_M must be >= 4");
  MeansScan out;
  out.radii.assign(radii.begin(), radii.end());
  out.integrals.resize(radii.size());
  const double h = 2.0 * std::numbers::pi / angular_M;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double s = 0.0;
    for (int j = 0; j < angular_M; ++j) s += integrand(std::polar(radii[i], j * h));
    out.integrals[i] = s * h;
  }
  out.beta = fit_means_slope(out.radii, out.integrals);
  return out;
}

MeansScan integral_means_scan_closed(double kappa, double p, double q,
                                     std::span<const double> radii, int angular_M) {
  MomentSpec spec = MomentSpec::from_pq(kappa, p, q);
  if (!spec.gamma) throw DomainError("closed-form scan needs (p, q) on the integrability parabola");
  const double gamma = *spec.gamma;
  if (2.0 * gamma <= -1.0) {
    check_radii(radii);
    MeansScan out;
    out.radii.assign(radii.begin(), radii.end());
    out.tip_dominated = true;
    return out;
  }
  return integral_means_scan(
      [&](cplx z) {
        return std::abs(closed_two_point(z, std::conj(z), kappa, gamma)) / std::pow(std::abs(z), q);
      },
      radii, angular_M);
}

std::vector<cplx> means_scan_points(std::span<const double> radii, int angular_M) {
  std::vector<cplx> pts;
  pts.reserve(radii.size() * angular_M);
  const double h = 2.0 * std::numbers::pi / angular_M;
  for (double r : radii) {
    for (int j = 0; j < angular_M; ++j) pts.push_back(std::polar(r, j * h));
  }
  return pts;
}

MeansScan integral_means_scan_mc(const SampleBatch& b, double p, double q,
                                 std::span<const double> radii, int angular_M) {
  check_radii(radii);
  std::vector<cplx> expected = means_scan_points(radii, angular_M);
  if (expected.size() != b.points.size()) throw UsageError("batch points do not match the scan layout");
  for (std::size_t j = 0; j < expected.size(); ++j) {
    if (std::abs(expected[j] - b.points[j]) > 1e-14) {
      throw UsageError("batch points do not match the scan layout");
    }
  }
  MeansScan out;
  out.radii.assign(radii.begin(), radii.end());
  out.integrals.resize(radii.size());
  const double h = 2.0 * std::numbers::pi / angular_M;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double s = 0.0;
    for (int j = 0; j < angular_M; ++j) {
      cplx z = expected[i * angular_M + j];
      s += estimate_moduli(b, p, q, z).value.real();
    }
    out.integrals[i] = s * h;
  }
  out.beta = fit_means_slope(out.radii, out.integrals);
  return out;
}

}  // namespace sle
