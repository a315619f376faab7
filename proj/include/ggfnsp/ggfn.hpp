#pragma once

#include <span>

#include "ggfnsp/errors.hpp"

namespace ggfnsp {

/** Closed real interval [lo, hi]. */
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/**
 * Generalized Gaussian fuzzy number <(c, sigma); h>.
 *
 * Membership is a Gaussian bump of height h:
 *   mu(x) = h * exp(-0.5 * ((x - c) / sigma)^2)
 * with core c (most possible value), dispersion sigma >= 0 and height
 * h in (0, 1] interpreted as the reliability of the estimate. h < 1 models a
 * subnormal fuzzy number. sigma == 0 degenerates to a crisp value at c.
 *
 * Construction validates the fields and throws ValidationError, so a Ggfn
 * instance is always well formed. Values are immutable; every operation on
 * them is a pure function and safe for concurrent use.
 */
struct Ggfn {
  double c;
  double sigma;
  double h;

  Ggfn(double core, double dispersion, double height);
};

/** Membership grade mu(x); lies in [0, h]. Total on valid inputs. */
double membership(const Ggfn& g, double x);

/**
 * alpha-cut [A_L(alpha), A_R(alpha)] with endpoints
 *   c -/+ sigma * sqrt(-2 * ln(alpha / h)).
 * Requires 0 < alpha <= h (DomainError otherwise); callers clamp when they
 * need a total function. The interval is symmetric about c and shrinks to
 * [c, c] as alpha -> h.
 */
Interval alpha_cut(const Ggfn& g, double alpha);

/**
 * Sum of two GGFNs: cores and dispersions add, and the height is the
 * sigma-weighted geometric mean
 *   h = h_a^(sa/(sa+sb)) * h_b^(sb/(sa+sb)).
 * When sa + sb == 0 the weights are 0/0; the result is defined as the
 * unweighted geometric mean sqrt(h_a * h_b), the uniform limit as both
 * dispersions shrink to zero. The result height always lies between
 * min(h_a, h_b) and max(h_a, h_b).
 */
Ggfn add(const Ggfn& a, const Ggfn& b);

/**
 * n-ary sum by the closed formula: c = sum c_i, sigma = sum sigma_i,
 *   h = exp(sum sigma_i * ln h_i / sum sigma_i)
 * (unweighted geometric mean when sum sigma_i == 0). Equals iterated binary
 * add() in any association order whenever the intermediate dispersion sums
 * stay positive; the closed form is used directly for numerical stability.
 * Throws EmptyInput on an empty sequence.
 */
Ggfn fold_sum(std::span<const Ggfn> items);

/** Scalar multiple: <(k*c, |k|*sigma); h>. Height is unchanged. */
Ggfn scale(double k, const Ggfn& g);

/**
 * True iff the lower alpha-cut endpoint is nonnegative for every
 * alpha in [alpha_star, h], i.e. A_L(alpha_star) >= 0 (the lower endpoint is
 * nondecreasing in alpha). Requires 0 < alpha_star <= h.
 */
bool nonneg_feasible(const Ggfn& g, double alpha_star);

}  // namespace ggfnsp
