#pragma once

namespace dsep {

// Thread budget for the OpenMP kernels. Honors the DISKSEVER_THREADS
// environment variable (which caps, never raises, the OpenMP default).
int max_threads();

// Runtime override used by tests and the benchmark driver; 0 restores the
// environment default.
void set_max_threads(int threads);

}  // namespace dsep
