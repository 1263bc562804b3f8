#include <cmath>
#include <string>

#include "sle/errors.hpp"
#include "sle/loewner.hpp"

namespace sle {

void SimConfig::validate() const {
  auto bad = [](const std::string& what) { throw ConfigError("invalid config: " + what); };
  if (!(kappa > 0.0) || !std::isfinite(kappa)) bad("kappa must be > 0");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) bad("horizon T must be > 0");
  if (!(dt > 0.0)) bad("dt must be > 0");
  if (dt > horizon) bad("dt must not exceed horizon T");
  if (!(singular_delta > 0.0 && singular_delta < 1.0)) bad("singular_delta must lie in (0,1)");
  if (!(r_max > 0.0 && r_max < 1.0)) bad("r_max must lie in (0,1)");
}

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream, std::uint32_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    tag};
  return std::mt19937_64(seq);
}

namespace {

std::vector<double> uniform_grid(double horizon, double dt) {
  auto n = static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9));
  if (n == 0) n = 1;
  std::vector<double> t(n + 1);
  for (std::size_t k = 0; k < n; ++k) t[k] = static_cast<double>(k) * dt;
  t[n] = horizon;
  return t;
}

}  // namespace

DrivingPath DrivingPath::constant(double horizon, double dt, double theta0) {
  DrivingPath path;
  path.times = uniform_grid(horizon, dt);
  path.theta.assign(path.times.size(), theta0);
  return path;
}

DrivingPath sample_driver(const SimConfig& cfg) {
  cfg.validate();
  DrivingPath path;
  path.times = uniform_grid(cfg.horizon, cfg.dt);
  path.theta.resize(path.times.size());
  auto eng = stream_engine(cfg.seed, cfg.stream_id);
  std::normal_distribution<double> gauss;
  path.theta[0] = 0.0;
  for (std::size_t k = 0; k + 1 < path.times.size(); ++k) {
    double h = path.times[k + 1] - path.times[k];
    path.theta[k + 1] = path.theta[k] + std::sqrt(cfg.kappa * h) * gauss(eng);
  }
  return path;
}

DrivingPath refine_driver(const DrivingPath& coarse, double kappa, std::uint64_t seed,
                          std::uint64_t stream_id) {
  if (!(kappa > 0.0)) throw ConfigError("invalid config: kappa must be > 0");
  auto eng = stream_engine(seed, stream_id, 1u + static_cast<std::uint32_t>(coarse.steps() % 0xffffu));
  std::normal_distribution<double> gauss;
  DrivingPath fine;
  std::size_t n = coarse.steps();
  fine.times.resize(2 * n + 1);
  fine.theta.resize(2 * n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    double t0 = coarse.times[k], t1 = coarse.times[k + 1];
    double h = t1 - t0;
    fine.times[2 * k] = t0;
    fine.theta[2 * k] = coarse.theta[k];
    fine.times[2 * k + 1] = t0 + 0.5 * h;
    // bridge midpoint variance: kappa h / 4
    fine.theta[2 * k + 1] =
        0.5 * (coarse.theta[k] + coarse.theta[k + 1]) + std::sqrt(0.25 * kappa * h) * gauss(eng);
  }
  fine.times[2 * n] = coarse.times[n];
  fine.theta[2 * n] = coarse.theta[n];
  return fine;
}

}  // namespace sle
