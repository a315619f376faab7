#pragma once

#include <cmath>

#include "ggfnsp/errors.hpp"
#include "ggfnsp/ggfn.hpp"

namespace ggfnsp {

/**
 * Risk-attitude weight for the cost-type ranking index. kappa = 1 is the
 * baseline; kappa = 0 ignores reliability entirely (risk neutral). Carried
 * explicitly on every call instead of as global state.
 */
struct RiskParams {
  double kappa = 1.0;
};

namespace detail {
inline void require_kappa(const RiskParams& rp) {
  if (!(rp.kappa >= 0.0)) {
    throw DomainError("kappa must be >= 0");
  }
}
}  // namespace detail

/**
 * Cost-type ranking index (lower is better):
 *   R = c - kappa * sigma * log10(h).
 * Since h <= 1 the reliability term is a nonnegative penalty, so R >= c, with
 * equality when h == 1, sigma == 0 or kappa == 0. Base-10 log by definition
 * (natural log appears only inside height aggregation). Additive over add()
 * for any fixed kappa and positively homogeneous; strictly increasing in c,
 * strictly decreasing in h (for sigma, kappa > 0) and nondecreasing in sigma.
 */
inline double r_cost(const Ggfn& g, const RiskParams& rp = {}) {
  detail::require_kappa(rp);
  return g.c - rp.kappa * g.sigma * std::log10(g.h);
}

/** Benefit-type ranking index: R = c + sigma * log10(h), so R <= c. */
inline double r_benefit(const Ggfn& g) {
  return g.c + g.sigma * std::log10(g.h);
}

}  // namespace ggfnsp
