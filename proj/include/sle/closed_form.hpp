#pragma once

#include <complex>
#include <optional>
#include <utility>

namespace sle {

using cplx = std::complex<double>;

enum class Branch { minus, plus };

// Point of the integrability parabola with parameter gamma.
std::pair<double, double> parabola_point(double kappa, double gamma);

// Cartesian form of the parabola; zero exactly on it.
double parabola_residual(double kappa, double p, double q);

// gamma = (4 + k -+ sqrt((4+k)^2 - 8 k p)) / 2k. DomainError past the vertex.
double parabola_gamma(double kappa, double p, Branch branch);

struct MomentSpec {
  double p = 0.0;
  double q = 0.0;
  std::optional<double> gamma;

  // q/p - 1; DomainError when p == 0.
  double sigma() const;

  static MomentSpec on_parabola(double kappa, double gamma);
  // gamma filled in when (p, q) lies on the parabola within tol.
  static MomentSpec from_pq(double kappa, double p, double q, double tol = 1e-10);
};

// Principal (1 - z)^gamma.
cplx closed_one_point(cplx z, double kappa, double gamma);

// (1 - z1)^g (1 - z2bar)^g (1 - z1 z2bar)^(-k g^2 / 2), principal branches.
cplx closed_two_point(cplx z1, cplx z2bar, double kappa, double gamma);

}  // namespace sle
