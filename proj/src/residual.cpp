#include "sle/residual.hpp"

#include <cmath>

#include "sle/errors.hpp"

namespace sle {

CoeffTriple abc_check(double p, double q, double a, double k) {
  CoeffTriple t;
  t.A = p - q + a - 0.5 * k * a * a;
  t.B = q - (3.0 + 0.5 * k) * a + k * a * a;
  t.C = -p + (2.0 + 0.5 * k) * a - 0.5 * k * a * a;
  t.sum = t.A + t.B + t.C;
  return t;
}

double spectrum_function(double p, double g, double k) {
  return k * g * g - (2.0 + 0.5 * k) * g + p;
}

double duality_check(double p, double g, double k) {
  double gd = 2.0 / k + 0.5 - g;
  return std::abs(spectrum_function(p, g, k) - spectrum_function(p, gd, k));
}

Holo1 one_point_candidate(double gamma) {
  long double g = gamma;
  return [g](lcplx z) { return std::pow(1.0L - z, g); };
}

Holo2 two_point_candidate(double gamma, double beta) {
  long double g = gamma, b = beta;
  return [g, b](lcplx z1, lcplx w) {
    return std::pow(1.0L - z1, g) * std::pow(1.0L - w, g) * std::pow(1.0L - z1 * w, -b);
  };
}

Diagonal moduli_candidate(double gamma, double beta, double q) {
  Holo2 g2 = two_point_candidate(gamma, beta);
  long double qq = q;
  return [g2, qq](long double x, long double y) {
    lcplx z(x, y);
    lcplx G = g2(z, std::conj(z));
    return qq == 0.0L ? G : G / std::pow(std::hypot(x, y), qq);
  };
}

namespace {

using ld = long double;

void check_step(double h) {
  if (!(h > 0.0 && h <= 1e-3)) throw UsageError("difference step must lie in (0, 1e-3]");
}

void check_point(lcplx z, double h, const char* what) {
  if (!(std::abs(z) < 1.0L)) throw DomainError(std::string(what) + " must lie in the unit disk");
  if (std::abs(1.0L - z) < 10.0L * h) {
    throw DomainError(std::string("stencil guard: ") + what + " within 10h of z = 1");
  }
}

struct Derivs1 {
  lcplx g, d1, d2;
};

Derivs1 derivs(const Holo1& g, lcplx z, ld h) {
  lcplx gp = g(z + h), g0 = g(z), gm = g(z - h);
  return {g0, (gp - gm) / (2.0L * h), (gp - 2.0L * g0 + gm) / (h * h)};
}

// Compare the difference quotients along the real and imaginary axes.
void cauchy_riemann_probe(const std::function<lcplx(lcplx)>& g, lcplx z, ld h) {
  const lcplx I(0.0L, 1.0L);
  lcplx dx = (g(z + h) - g(z - h)) / (2.0L * h);
  lcplx dy = (g(z + I * h) - g(z - I * h)) / (2.0L * I * h);
  if (std::abs(dx - dy) > 1e-6L * std::max<ld>(1.0L, std::abs(dx))) {
    throw UsageError("candidate is not holomorphic (Cauchy-Riemann probe failed)");
  }
}

// P(d)[G] from G, G', G'' at z.
lcplx apply_p(lcplx z, const Derivs1& d, ld p, ld q, ld k) {
  lcplx zd = z * d.d1;
  lcplx zd2 = zd + z * z * d.d2;
  lcplx one_m = 1.0L - z;
  lcplx pot = -p / (one_m * one_m) + q / one_m + (p - q);
  return -0.5L * k * zd2 - (1.0L + z) / one_m * zd + pot * d.g;
}

cplx to_double(lcplx v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

}  // namespace

cplx ode_residual(const Holo1& g, cplx zd, double p, double q, double kappa, double h) {
  check_step(h);
  lcplx z(zd.real(), zd.imag());
  check_point(z, h, "z");
  cauchy_riemann_probe(g, z, h);
  return to_double(apply_p(z, derivs(g, z, h), p, q, kappa));
}

cplx pde_residual(const Holo2& g, cplx z1d, cplx wd, double p, double q, double kappa,
                  double h) {
  check_step(h);
  lcplx z1(z1d.real(), z1d.imag()), w(wd.real(), wd.imag());
  check_point(z1, h, "z1");
  check_point(w, h, "z2bar");
  cauchy_riemann_probe([&](lcplx u) { return g(u, w); }, z1, h);
  cauchy_riemann_probe([&](lcplx u) { return g(z1, u); }, w, h);
  const ld hh = h;
  Derivs1 d1 = derivs([&](lcplx u) { return g(u, w); }, z1, hh);
  Derivs1 d2 = derivs([&](lcplx u) { return g(z1, u); }, w, hh);
  lcplx mixed = (g(z1 + hh, w + hh) - g(z1 + hh, w - hh) - g(z1 - hh, w + hh) +
                 g(z1 - hh, w - hh)) /
                (4.0L * hh * hh);
  lcplx r = apply_p(z1, d1, p, q, kappa) + apply_p(w, d2, p, q, kappa) +
            static_cast<ld>(kappa) * z1 * w * mixed;
  return to_double(r);
}

cplx moduli_residual(const Diagonal& f, cplx zd, double p, double q, double kappa, double h,
                     ModuliForm form) {
  check_step(h);
  const ld x = zd.real(), y = zd.imag(), hh = h;
  lcplx z(x, y);
  check_point(z, h, "z");
  if (q != 0.0 && std::abs(z) < 10.0L * hh) {
    throw DomainError("stencil guard: |z| within 10h of the origin with q != 0");
  }
  const ld qq = q, pp = p, k = kappa;
  Diagonal u = f;
  if (form == ModuliForm::full) {
    u = [&f, qq](ld a, ld b) { return f(a, b) * std::pow(std::hypot(a, b), qq); };
  }
  lcplx c = u(x, y);
  lcplx xp = u(x + hh, y), xm = u(x - hh, y), yp = u(x, y + hh), ym = u(x, y - hh);
  lcplx fx = (xp - xm) / (2.0L * hh), fy = (yp - ym) / (2.0L * hh);
  lcplx fxx = (xp - 2.0L * c + xm) / (hh * hh), fyy = (yp - 2.0L * c + ym) / (hh * hh);
  lcplx fxy = (u(x + hh, y + hh) - u(x + hh, y - hh) - u(x - hh, y + hh) + u(x - hh, y - hh)) /
              (4.0L * hh * hh);
  const lcplx I(0.0L, 1.0L);
  lcplx zb = std::conj(z);
  lcplx zd_f = 0.5L * z * (fx - I * fy);
  lcplx zbd_f = 0.5L * zb * (fx + I * fy);
  // (z d - zbar dbar) = -i d_theta, d_theta = x d_y - y d_x
  lcplx theta2 = x * x * fyy - 2.0L * x * y * fxy + y * y * fxx - x * fx - y * fy;
  lcplx rot2 = -theta2;
  lcplx a = 1.0L - z, b = 1.0L - zb;
  lcplx r = -0.5L * k * rot2 - (1.0L + z) / a * zd_f - (1.0L + zb) / b * zbd_f;
  if (form == ModuliForm::sigma) {
    // -p[1/(1-z)^2 + 1/(1-zbar)^2 + sigma - 1], with p(sigma - 1) = q - 2p
    lcplx bracket = 1.0L / (a * a) + 1.0L / (b * b);
    ld shift = pp != 0.0L ? pp * ((qq / pp - 1.0L) - 1.0L) : qq;
    r += (-pp * bracket - shift) * c;
  } else {
    lcplx pot = -pp / (a * a) - pp / (b * b) + qq / a + qq / b + 2.0L * pp - 2.0L * qq;
    r += pot * c;
  }
  return to_double(r);
}

Richardson richardson(const std::function<cplx(double)>& residual_at, double h) {
  Richardson r;
  r.residual = residual_at(h);
  r.residual_half = residual_at(0.5 * h);
  r.ratio = std::abs(r.residual) / std::abs(r.residual_half);
  r.order = std::log2(r.ratio);
  return r;
}

}  // namespace sle
