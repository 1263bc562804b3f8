#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sle/batch.hpp"

namespace sle {

struct MomentEstimate {
  cplx value;
  double std_error = 0.0;  // of the complex mean: sqrt(se_re^2 + se_im^2)
  double std_error_re = 0.0;
  double std_error_im = 0.0;
  std::size_t n_samples = 0;
  double median_of_means = 0.0;  // real part, 16 contiguous blocks
  double kappa = 0.0;
  double horizon = 0.0;
  double dt = 0.0;
};

// Mean, componentwise standard errors and median-of-means of values in
// their given order.
MomentEstimate summarize(std::span<const cplx> values);

// X(z) = exp((p/2) log f'(z) - (q/2) log(f(z)/z)).
cplx one_point_integrand(cplx log_f_over_z, cplx logfp, double p, double q);

// Ê X(z).
MomentEstimate estimate_one_point(const SampleBatch& b, double p, double q, cplx z);

// Ê |z|^q |f'(z)|^p / |f(z)|^q.
MomentEstimate estimate_moduli(const SampleBatch& b, double p, double q, cplx z);

// Ê X(z1) conj(X(z2)).
MomentEstimate estimate_two_point(const SampleBatch& b, double p, double q, cplx z1, cplx z2);

// |LHS - RHS| / max(1, |RHS|) for the m-fold transform identity of sample
// s: |z|^q |(f^[m])'(z)|^p / |f^[m](z)|^q against the same integrand of f
// at z^m with exponents (p, p + (q - p)/m). Needs z^m among the points;
// for m < 0 the exterior transform 1/f^[-m](1/z) is used.
double mfold_identity_check(const SampleBatch& b, std::size_t s, int m, cplx z, double p,
                            double q);

}  // namespace sle
