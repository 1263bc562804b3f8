#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace sle {

using cplx = std::complex<double>;

struct SimConfig {
  double kappa = 2.0;
  double horizon = 8.0;
  double dt = 1e-3;
  std::uint64_t seed = 1;
  std::uint64_t stream_id = 0;
  double singular_delta = 0.1;
  double r_max = 0.9;

  // Throws ConfigError naming the first violated constraint.
  void validate() const;
};

// Engine for substream (seed, stream). Distinct pairs give independent
// sequences; the tag separates auxiliary uses of the same pair.
std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream,
                              std::uint32_t tag = 0);

struct DrivingPath {
  std::vector<double> times;
  std::vector<double> theta;

  double horizon() const { return times.back(); }
  std::size_t steps() const { return times.size() - 1; }

  // theta held at theta0 on the grid used by sample_driver.
  static DrivingPath constant(double horizon, double dt, double theta0 = 0.0);
};

// theta_k = sqrt(kappa) B_{t_k} on ceil(T/dt) steps; the last step is
// shortened when dt does not divide T.
DrivingPath sample_driver(const SimConfig& cfg);

// Brownian-bridge midpoint refinement: halves every step, keeping the
// coarse grid values.
DrivingPath refine_driver(const DrivingPath& coarse, double kappa,
                          std::uint64_t seed, std::uint64_t stream_id);

struct FlowState {
  cplx z0;
  cplx w;
  cplx logderiv;  // log of d/dz f~_t(z0), continuous in t
  cplx logratio;  // log of f~_t(z0)/z0, continuous in t
};

// Integrates the reverse radial flow up to cfg.horizon along path.
// Throws DomainError if some |z| > r_max, SingularityError on failure.
std::vector<FlowState> evolve(const DrivingPath& path, const SimConfig& cfg,
                              std::span<const cplx> points);

struct WholePlaneSample {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  double kappa = 0.0;
  double horizon = 0.0;
  double dt = 0.0;
  std::vector<cplx> points;
  std::vector<cplx> log_f_over_z;  // T + logratio
  std::vector<cplx> logfp;         // T + logderiv

  cplx logf(std::size_t i) const;  // log_f_over_z + principal log z
};

WholePlaneSample whole_plane_sample(const SimConfig& cfg,
                                    std::span<const cplx> points);

}  // namespace sle
