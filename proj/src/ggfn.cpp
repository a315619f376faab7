#include "ggfnsp/ggfn.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ggfnsp {

namespace {

void require_valid_height(double h) {
  if (!(h > 0.0) || h > 1.0 || !std::isfinite(h)) {
    throw ValidationError("height must lie in (0, 1], got " +
                          std::to_string(h));
  }
}

// Result heights are clamped into (0, 1]: the exact value is bounded by the
// operand heights, but exp() may under-flow to 0 for near-denormal operands
// and the weighted log average may round to a hair above 0.
double clamp_height(double h) {
  if (h < std::numeric_limits<double>::min()) {
    return std::numeric_limits<double>::min();
  }
  return h < 1.0 ? h : 1.0;
}

}  // namespace

Ggfn::Ggfn(double core, double dispersion, double height)
    : c(core), sigma(dispersion), h(height) {
  if (!std::isfinite(c)) {
    throw ValidationError("core must be finite");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("dispersion must be finite and >= 0, got " +
                          std::to_string(dispersion));
  }
  require_valid_height(h);
}

double membership(const Ggfn& g, double x) {
  if (g.sigma == 0.0) {
    return x == g.c ? g.h : 0.0;
  }
  const double z = (x - g.c) / g.sigma;
  return g.h * std::exp(-0.5 * z * z);
}

Interval alpha_cut(const Ggfn& g, double alpha) {
  if (!(alpha > 0.0) || alpha > g.h) {
    throw DomainError("alpha-cut level must lie in (0, h]; alpha=" +
                      std::to_string(alpha) + ", h=" + std::to_string(g.h));
  }
  // alpha <= h, so the ratio is <= 1 and the log argument is safe.
  const double half_width = g.sigma * std::sqrt(-2.0 * std::log(alpha / g.h));
  return Interval{g.c - half_width, g.c + half_width};
}

Ggfn add(const Ggfn& a, const Ggfn& b) {
  const double s = a.sigma + b.sigma;
  double h;
  if (s == 0.0) {
    h = std::sqrt(a.h * b.h);
  } else {
    h = std::exp((a.sigma * std::log(a.h) + b.sigma * std::log(b.h)) / s);
  }
  return Ggfn(a.c + b.c, s, clamp_height(h));
}

Ggfn fold_sum(std::span<const Ggfn> items) {
  if (items.empty()) {
    throw EmptyInput("fold_sum of an empty sequence");
  }
  double sum_c = 0.0;
  double sum_sigma = 0.0;
  double weighted_log_h = 0.0;  // sum sigma_i * ln h_i
  double plain_log_h = 0.0;     // fallback accumulator for sum sigma == 0
  for (const Ggfn& g : items) {
    sum_c += g.c;
    sum_sigma += g.sigma;
    weighted_log_h += g.sigma * std::log(g.h);
    plain_log_h += std::log(g.h);
  }
  double h;
  if (sum_sigma == 0.0) {
    h = std::exp(plain_log_h / static_cast<double>(items.size()));
  } else {
    h = std::exp(weighted_log_h / sum_sigma);
  }
  return Ggfn(sum_c, sum_sigma, clamp_height(h));
}

Ggfn scale(double k, const Ggfn& g) {
  return Ggfn(k * g.c, std::fabs(k) * g.sigma, g.h);
}

bool nonneg_feasible(const Ggfn& g, double alpha_star) {
  if (!(alpha_star > 0.0) || alpha_star > g.h) {
    throw DomainError("alpha_star must lie in (0, h]; alpha_star=" +
                      std::to_string(alpha_star));
  }
  return alpha_cut(g, alpha_star).lo >= 0.0;
}

}  // namespace ggfnsp
