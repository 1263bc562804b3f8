#pragma once

namespace sle {

// Worker count used by the OpenMP kernels. 0 restores the runtime default.
void set_worker_count(int n);
int worker_count();

// SLE_LAB_THREADS if set to a positive integer, otherwise fallback.
int worker_count_from_env(int fallback);

}  // namespace sle
