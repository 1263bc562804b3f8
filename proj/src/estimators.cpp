#include "sle/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "sle/errors.hpp"

namespace sle {

MomentEstimate summarize(std::span<const cplx> values) {
  MomentEstimate e;
  const std::size_t n = values.size();
  e.n_samples = n;
  if (n == 0) {
    e.value = {std::nan(""), std::nan("")};
    e.median_of_means = std::nan("");
    return e;
  }
  cplx sum = 0.0;
  for (const cplx& v : values) sum += v;
  cplx mean = sum / static_cast<double>(n);
  double vr = 0.0, vi = 0.0;
  for (const cplx& v : values) {
    double dr = v.real() - mean.real(), di = v.imag() - mean.imag();
    vr += dr * dr;
    vi += di * di;
  }
  if (n > 1) {
    double denom = static_cast<double>(n - 1) * static_cast<double>(n);
    e.std_error_re = std::sqrt(vr / denom);
    e.std_error_im = std::sqrt(vi / denom);
  }
  e.std_error = std::hypot(e.std_error_re, e.std_error_im);
  e.value = mean;

  const std::size_t blocks = std::min<std::size_t>(16, n);
  std::vector<double> bm(blocks);
  for (std::size_t k = 0; k < blocks; ++k) {
    std::size_t lo = k * n / blocks, hi = (k + 1) * n / blocks;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += values[i].real();
    bm[k] = s / static_cast<double>(hi - lo);
  }
  std::sort(bm.begin(), bm.end());
  e.median_of_means = blocks % 2 ? bm[blocks / 2] : 0.5 * (bm[blocks / 2 - 1] + bm[blocks / 2]);
  return e;
}

cplx one_point_integrand(cplx log_f_over_z, cplx logfp, double p, double q) {
  return std::exp(0.5 * p * logfp - 0.5 * q * log_f_over_z);
}

namespace {

template <class F>
MomentEstimate reduce(const SampleBatch& b, F&& integrand) {
  std::vector<cplx> v(b.n_samples);
  const long n = static_cast<long>(b.n_samples);
#pragma omp parallel for schedule(static)
  for (long s = 0; s < n; ++s) v[s] = integrand(static_cast<std::size_t>(s));
  MomentEstimate e = summarize(v);
  e.kappa = b.cfg.kappa;
  e.horizon = b.cfg.horizon;
  e.dt = b.cfg.dt;
  return e;
}

}  // namespace

MomentEstimate estimate_one_point(const SampleBatch& b, double p, double q, cplx z) {
  std::size_t j = b.index_of(z);
  return reduce(b, [&](std::size_t s) {
    return one_point_integrand(b.ratio_at(s, j), b.logfp_at(s, j), p, q);
  });
}

MomentEstimate estimate_moduli(const SampleBatch& b, double p, double q, cplx z) {
  std::size_t j = b.index_of(z);
  return reduce(b, [&](std::size_t s) {
    return cplx(std::exp(p * b.logfp_at(s, j).real() - q * b.ratio_at(s, j).real()), 0.0);
  });
}

MomentEstimate estimate_two_point(const SampleBatch& b, double p, double q, cplx z1, cplx z2) {
  std::size_t j1 = b.index_of(z1);
  std::size_t j2 = b.index_of(z2);
  return reduce(b, [&](std::size_t s) {
    cplx x1 = one_point_integrand(b.ratio_at(s, j1), b.logfp_at(s, j1), p, q);
    cplx x2 = one_point_integrand(b.ratio_at(s, j2), b.logfp_at(s, j2), p, q);
    return x1 * std::conj(x2);
  });
}

namespace {

// f^[n](zeta) and its derivative for n >= 1 from the tracked logs of f at
// u = zeta^n.
struct Transformed {
  cplx value;
  cplx deriv;
};

Transformed interior_transform(cplx zeta, int n, cplx ratio_u, cplx logfp_u) {
  cplx u = std::pow(zeta, n);
  cplx logf_u = ratio_u + std::log(u);
  double inv = 1.0 / n;
  cplx value = zeta * std::exp(inv * ratio_u);
  cplx deriv = std::pow(zeta, n - 1) * std::exp(logfp_u + (inv - 1.0) * logf_u);
  return {value, deriv};
}

}  // namespace

double mfold_identity_check(const SampleBatch& b, std::size_t s, int m, cplx z, double p,
                            double q) {
  if (m == 0) throw DomainError("m-fold transform needs m != 0");
  if (s >= b.n_samples) throw UsageError("sample index out of range");
  const int n = std::abs(m);
  const cplx zeta = m > 0 ? z : 1.0 / z;
  if (!(std::abs(zeta) < 1.0) || zeta == 0.0) {
    throw DomainError(m > 0 ? "m > 0 needs 0 < |z| < 1" : "m < 0 needs |z| > 1");
  }
  const cplx u = std::pow(zeta, n);
  const std::size_t j = b.index_of(u, 1e-12);
  const cplx ratio_u = b.ratio_at(s, j), logfp_u = b.logfp_at(s, j);

  Transformed g = interior_transform(zeta, n, ratio_u, logfp_u);
  cplx fm, fmp;
  if (m > 0) {
    fm = g.value;
    fmp = g.deriv;
  } else {
    // f^[m](z) = 1 / g(1/z)
    fm = 1.0 / g.value;
    fmp = g.deriv * zeta * zeta / (g.value * g.value);
  }
  double lhs = std::pow(std::abs(z), q) * std::pow(std::abs(fmp), p) / std::pow(std::abs(fm), q);

  double qm = p + (q - p) / m;
  double rhs = std::pow(std::abs(u), qm) * std::exp(p * logfp_u.real()) /
               std::pow(std::abs(u) * std::exp(ratio_u.real()), qm);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

}  // namespace sle
