#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sle/batch.hpp"

namespace sle {

// r * exp(2 pi i j / M), j = 0..M-1.
std::vector<cplx> circle_points(double radius, int M);

// gamma_1..gamma_{n_max} of one map from log(f/z) sampled at
// circle_points(radius, M): gamma_n = c_n r^-n / 2 with c_n the discrete
// Fourier coefficient.
std::vector<cplx> log_coeffs_of(std::span<const cplx> log_f_over_z_on_circle, double radius,
                                int n_max);

struct LogCoeffStats {
  int n_max = 0;
  int M = 0;
  double radius = 0.0;
  std::size_t n_samples = 0;
  // index n-1 holds gamma_n
  std::vector<cplx> mean_gamma;
  std::vector<double> se_gamma_re, se_gamma_im;
  std::vector<double> mean_sq, se_sq;
  // index n-1 holds E gamma_n conj(gamma_{n+1}), n = 1..n_max-1
  std::vector<cplx> cross;
  std::vector<double> se_cross_re, se_cross_im;
  // r^M: relative size of the first aliased Taylor term
  double aliasing_bound = 0.0;
  // r^(-2 n_max): amplification of per-sample errors in |gamma_n|^2
  double noise_amplification = 0.0;
};

// Requires b.points == circle_points(radius, M) and n_max < M/2.
LogCoeffStats extract_log_coeffs(const SampleBatch& b, double radius, int n_max, int M);

// -((n+1)/2) * sum_{k=2}^{n+1} 1/k.
double milin_expectation(int n);

}  // namespace sle
