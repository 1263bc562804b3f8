#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "sle/spectrum.hpp"

namespace sle {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

struct CoeffTriple {
  double A, B, C, sum;
};

// Coefficients of P(d)[(1 - z)^alpha] on (1-z)^alpha, (1-z)^(alpha-1),
// (1-z)^(alpha-2).
CoeffTriple abc_check(double p, double q, double alpha, double kappa);

// k g^2 - (2 + k/2) g + p.
double spectrum_function(double p, double gamma, double kappa);

// |beta(p, g) - beta(p, 2/k + 1/2 - g)|.
double duality_check(double p, double gamma, double kappa);

// Candidates are evaluated in extended precision so that second
// differences at h = 1e-4 stay well above rounding.
using Holo1 = std::function<lcplx(lcplx)>;
using Holo2 = std::function<lcplx(lcplx, lcplx)>;
using Diagonal = std::function<lcplx(long double x, long double y)>;

Holo1 one_point_candidate(double gamma);
Holo2 two_point_candidate(double gamma, double beta);
// F(z, zbar) = G(z, zbar) / |z|^q with G the two-point form on the diagonal.
Diagonal moduli_candidate(double gamma, double beta, double q);

constexpr double kDefaultStep = 1e-4;

// [-(k/2)(z d)^2 - ((1+z)/(1-z)) z d - p/(1-z)^2 + q/(1-z) + p - q] G
// by central differences. UsageError if G fails a Cauchy-Riemann probe.
cplx ode_residual(const Holo1& g, cplx z, double p, double q, double kappa,
                  double h = kDefaultStep);

// [P(d1) + P(d2bar) + k z1 d1 z2bar d2bar] G(z1, z2bar).
cplx pde_residual(const Holo2& g, cplx z1, cplx z2bar, double p, double q, double kappa,
                  double h = kDefaultStep);

enum class ModuliForm {
  sigma,  // equation for F = G/|z|^q written with sigma = q/p - 1
  full,   // equation for G itself; the candidate passed is still F
};

// Diagonal equation with (z d - zbar dbar) and z d from real 2D stencils in
// (Re z, Im z). In full form the residual is that of G = |z|^q F.
cplx moduli_residual(const Diagonal& f, cplx z, double p, double q, double kappa,
                     double h = kDefaultStep, ModuliForm form = ModuliForm::sigma);

struct Richardson {
  cplx residual;       // at h
  cplx residual_half;  // at h/2
  double ratio;        // |r(h)| / |r(h/2)|
  double order;        // log2 of ratio
};

Richardson richardson(const std::function<cplx(double)>& residual_at, double h = kDefaultStep);

struct SeedReport {
  double kappa = 0.0;
  // max distance between seed-system solutions and curve_eval
  double red_dev = 0.0;
  double green_dev = 0.0;
  double quartic_dev = 0.0;
  // max |gamma0 - gamma0^-(gamma)| on the quartic branch; all 2 gamma0 + 1 <= 0
  double gamma0_dev = 0.0;
  bool tip_condition = true;
  // intersections and tangencies found numerically vs special_points
  PQ P0, P1, Q0, Q1, T0, T1, T2;
  double special_dev = 0.0;
  double p_star_dev = 0.0;
  double p0dblprime_dev = 0.0;
  // minimum of the quartic discriminant on [-100, 100]
  double delta_min = 0.0;
  // quartic parameters where it crosses the red parabola (all real gamma)
  std::vector<double> red_quartic_gammas;
  std::vector<PQ> red_quartic_points;
};

SeedReport seed_systems(double kappa);

}  // namespace sle
