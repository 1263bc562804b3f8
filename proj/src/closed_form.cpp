#include "sle/closed_form.hpp"

#include <cmath>
#include <string>

#include "sle/errors.hpp"

namespace sle {

std::pair<double, double> parabola_point(double kappa, double gamma) {
  double p = -0.5 * kappa * gamma * gamma + (2.0 + 0.5 * kappa) * gamma;
  double q = 2.0 * p - (1.0 + 0.5 * kappa) * gamma;
  return {p, q};
}

double parabola_residual(double kappa, double p, double q) {
  double u = (2.0 * p - q) / (2.0 + kappa);
  return 2.0 * kappa * u * u - (4.0 + kappa) * u + p;
}

double parabola_gamma(double kappa, double p, Branch branch) {
  if (!(kappa > 0.0)) throw DomainError("kappa must be > 0");
  double a = 4.0 + kappa;
  double disc = a * a - 8.0 * kappa * p;
  if (disc < 0.0) {
    throw DomainError("p = " + std::to_string(p) + " lies beyond the parabola vertex (4+k)^2/8k");
  }
  double r = std::sqrt(disc);
  return (branch == Branch::minus ? a - r : a + r) / (2.0 * kappa);
}

double MomentSpec::sigma() const {
  if (p == 0.0) throw DomainError("sigma = q/p - 1 undefined at p = 0");
  return q / p - 1.0;
}

MomentSpec MomentSpec::on_parabola(double kappa, double gamma) {
  auto [p, q] = parabola_point(kappa, gamma);
  return {p, q, gamma};
}

MomentSpec MomentSpec::from_pq(double kappa, double p, double q, double tol) {
  MomentSpec s{p, q, std::nullopt};
  double g = (2.0 * p - q) / (1.0 + 0.5 * kappa);
  auto [pp, qq] = parabola_point(kappa, g);
  if (std::abs(pp - p) <= tol * std::max(1.0, std::abs(p)) &&
      std::abs(qq - q) <= tol * std::max(1.0, std::abs(q))) {
    s.gamma = g;
  }
  return s;
}

cplx closed_one_point(cplx z, double /*kappa*/, double gamma) {
  return std::pow(1.0 - z, gamma);
}

cplx closed_two_point(cplx z1, cplx z2bar, double kappa, double gamma) {
  double beta = 0.5 * kappa * gamma * gamma;
  return std::pow(1.0 - z1, gamma) * std::pow(1.0 - z2bar, gamma) *
         std::pow(1.0 - z1 * z2bar, -beta);
}

}  // namespace sle
