#include "sle/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace sle {

namespace {
int g_default = 0;
}

void set_worker_count(int n) {
  if (g_default == 0) g_default = omp_get_max_threads();
  omp_set_num_threads(n > 0 ? n : g_default);
}

int worker_count() { return omp_get_max_threads(); }

int worker_count_from_env(int fallback) {
  const char* v = std::getenv("SLE_LAB_THREADS");
  if (v == nullptr) return fallback;
  try {
    int n = std::stoi(v);
    return n > 0 ? n : fallback;
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace sle
