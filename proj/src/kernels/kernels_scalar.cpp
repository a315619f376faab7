#include <cmath>
#include <cstddef>

#include "ggfnsp/kernels.hpp"

namespace ggfnsp::kernels {
namespace {

constexpr double kEps = 2.220446049250313e-16;

void sample_costs_scalar(std::size_t n, const double* c, const double* sigma,
                         const double* u01, const double* v01, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double q = u01[i] < kEps ? kEps : u01[i];
    const double t = std::sqrt(-2.0 * std::log(q));
    out[i] = c[i] + sigma[i] * t * (1.0 - 2.0 * v01[i]);
  }
}

void ranked_weights_scalar(std::size_t n, const double* c, const double* sigma,
                           const double* h, double kappa, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = c[i] - kappa * sigma[i] * std::log10(h[i]);
  }
}

}  // namespace

const Backend& scalar() {
  static const Backend backend{"scalar", &sample_costs_scalar,
                               &ranked_weights_scalar};
  return backend;
}

}  // namespace ggfnsp::kernels
