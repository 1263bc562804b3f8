#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "sle/batch.hpp"
#include "sle/log_coeffs.hpp"
#include "sle/parallel.hpp"
#include "sle/phase_grid.hpp"

namespace {

double seconds(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-12s serial %8.3f s  parallel %8.3f s  speedup %5.2f  identical %s\n", name, serial, parallel,
              serial / parallel, same ? "yes" : "NO");
}

}  // namespace

// usage: bench_kernels [samples] [grid nodes per axis]
int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  const int nodes = argc > 2 ? std::atoi(argv[2]) : 200;
  sle::set_worker_count(sle::worker_count_from_env(0));
  std::printf("workers %d\n", sle::worker_count());

  sle::SimConfig cfg;
  cfg.kappa = 6.0;
  auto pts = sle::circle_points(0.5, 16);
  sle::SampleBatch a, b;
  double ts = seconds([&] { a = sle::generate_batch_serial(cfg, pts, n); }, 1);
  double tp = seconds([&] { b = sle::generate_batch(cfg, pts, n); }, 1);
  report("batch", ts, tp, a.log_f_over_z == b.log_f_over_z && a.logfp == b.logfp);

  sle::GridSpec g = sle::default_grid(6.0);
  g.np = g.nq = nodes;
  std::vector<sle::SpectrumPoint> gs, gp;
  ts = seconds([&] { gs = sle::phase_grid_serial(6.0, 1, g); }, 3);
  tp = seconds([&] { gp = sle::phase_grid(6.0, 1, g); }, 3);
  bool same = gs.size() == gp.size();
  for (std::size_t i = 0; same && i < gs.size(); ++i)
    same = gs[i].region == gp[i].region && gs[i].beta == gp[i].beta && gs[i].adjacent == gp[i].adjacent;
  report("phase_grid", ts, tp, same);
  return 0;
}
