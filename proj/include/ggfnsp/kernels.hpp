#pragma once

#include <cstddef>

namespace ggfnsp::kernels {

/**
 * Batched numeric kernels behind the two data-parallel inner loops of the
 * library: the Monte Carlo cost-sampling transform and the per-edge ranked
 * weight computation. A Backend bundles one implementation of each.
 *
 * The scalar backend is the reference semantics (plain libm math, one element
 * at a time). SIMD backends may differ from it by a few ulp per element
 * (vectorized log); equivalence is bounded by the kernel tests. Backend
 * selection is per process (see active()), so runs are bit-reproducible for
 * a fixed machine and environment.
 */
struct Backend {
  const char* name;

  /**
   * Single-value alpha-cut sampling transform. For each i:
   *   t   = sqrt(-2 * ln(max(u01[i], eps_machine)))
   *   out = c[i] + sigma[i] * t * (1 - 2 * v01[i])
   * which is v*A_L(u) + (1-v)*A_R(u) at level u = u01*h; the height cancels
   * in u/h, so the transform never needs h. u01 is clipped at machine epsilon
   * (a zero level has an unbounded cut). No rejection here: callers redraw
   * negative outputs to keep cost semantics.
   */
  void (*sample_costs)(std::size_t n, const double* c, const double* sigma,
                       const double* u01, const double* v01, double* out);

  /**
   * Ranked edge weights: out[i] = c[i] - kappa * sigma[i] * log10(h[i]).
   * All outputs are >= c[i] when h <= 1.
   */
  void (*ranked_weights)(std::size_t n, const double* c, const double* sigma,
                         const double* h, double kappa, double* out);
};

/** Reference implementation; always available. */
const Backend& scalar();

/** AVX2+FMA implementation, or nullptr when unsupported by build or CPU. */
const Backend* avx2();

/** True when the running CPU supports the AVX2 backend (and it was built). */
bool avx2_available();

/**
 * Process-wide backend: the best supported one, overridable with the
 * environment variable GGFNSP_KERNELS=auto|scalar|avx2 (checked once, on
 * first use; forcing an unavailable backend falls back to scalar with a
 * warning on stderr).
 */
const Backend& active();

}  // namespace ggfnsp::kernels
