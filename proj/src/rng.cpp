#include "ggfnsp/rng.hpp"

#include <cmath>

#include "ggfnsp/errors.hpp"

namespace ggfnsp {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double x, y, s;
  do {
    x = 2.0 * u01() - 1.0;
    y = 2.0 * u01() - 1.0;
    s = x * x + y * y;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = y * f;
  have_spare_ = true;
  return x * f;
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) {
    throw DomainError("gamma shape must be > 0");
  }
  if (shape < 1.0) {
    // Boost: G(a) = G(a + 1) * U^(1/a).
    const double g = gamma(shape + 1.0);
    const double u = u01_clipped();
    return g * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = u01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) {
      return d * v;
    }
    if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

double Rng::beta(double a, double b) {
  const double ga = gamma(a);
  const double gb = gamma(b);
  const double sum = ga + gb;
  if (sum == 0.0) {
    return 0.5;  // both draws under-flowed; the symmetric tie value
  }
  return ga / sum;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t id) {
  if (id == 0) {
    return seed;
  }
  // splitmix64 finalizer applied to the (seed, id) combination.
  std::uint64_t z = seed + id * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace ggfnsp
