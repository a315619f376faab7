#pragma once

#include <cstdint>
#include <random>

namespace ggfnsp {

/**
 * Deterministic random stream shared by every stochastic component.
 *
 * The engine is std::mt19937_64 (a fixed, portable bit sequence), but all
 * variate conversions are implemented here instead of via std::*_distribution,
 * whose output sequences are implementation-defined. This pins every sampled
 * stream across standard libraries and platforms for a given seed.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /** Uniform double in [0, 1) with 53 random bits. */
  double u01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /**
   * Uniform double in [eps, 1): u01() with results below machine epsilon
   * clipped up to it. Used for alpha levels, where a zero level would make
   * the cut degenerate ("machine-epsilon clipping").
   */
  double u01_clipped() {
    const double u = u01();
    return u < kMachineEps ? kMachineEps : u;
  }

  /** Standard normal via the Marsaglia polar method (no trigonometry). */
  double normal();

  /**
   * Gamma(shape, 1) via Marsaglia-Tsang squeeze for shape >= 1 and the
   * G(a) = G(a+1) * U^(1/a) boost for shape < 1. shape must be > 0.
   */
  double gamma(double shape);

  /** Beta(a, b) as Ga / (Ga + Gb) from two independent Gamma draws. */
  double beta(double a, double b);

  static constexpr double kMachineEps = 2.220446049250313e-16;

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/**
 * Derives a child seed from (seed, id) with a splitmix64-style finalizer.
 * mix(seed, 0) == seed by definition, so the 0th derivation of a stream is
 * the stream itself (this makes a 1-replication experiment bit-identical to
 * a plain scenario batch run at the same seed).
 */
std::uint64_t mix(std::uint64_t seed, std::uint64_t id);

/** Stream tags keeping sibling derivations disjoint. */
inline constexpr std::uint64_t kTagHeights = 0x6865696768747301ULL;
inline constexpr std::uint64_t kTagScenarios = 0x7363656e6172696fULL;
inline constexpr std::uint64_t kTagTopology = 0x746f706f6c6f6779ULL;
inline constexpr std::uint64_t kTagCosts = 0x636f737473000001ULL;

}  // namespace ggfnsp
