#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ggfnsp/network.hpp"
#include "ggfnsp/ranking.hpp"
#include "ggfnsp/solver.hpp"

namespace ggfnsp {

/**
 * One row of the scaling experiment. Wall-clock time and peak memory are
 * environment-dependent; they are reported but never asserted against.
 * `skipped` marks grid sizes whose source node is isolated (no solve ran).
 */
struct ScalingRow {
  std::size_t n_nodes = 0;
  std::size_t m_edges = 0;
  NodeId t_dst = 0;
  double t_median_s = 0.0;
  std::uint64_t peak_mem_bytes = 0;
  bool skipped = false;
};

/**
 * Runtime experiment over the size grid k_i = ceil(i * N / parts),
 * i = 1..parts. Per grid size: induce the subgraph on nodes {0..k-1}, set
 * src to the first node and dst to the highest node reachable from it, then
 * time dijkstra_ranked over `repeats` runs (median; even counts average the
 * two middle values) and record the solve's peak transient allocation.
 * Strictly serial and single-threaded so the timings mean something. Rows
 * are ordered by ascending grid index. Requires parts >= 1 and repeats >= 1
 * (DomainError otherwise).
 */
std::vector<ScalingRow> run_scaling(const Network& net, std::size_t parts,
                                    std::size_t repeats,
                                    const RiskParams& rp = {});

/** Which endpoint of the alpha-cut interval the profile evaluates. */
enum class EndpointMode { lower, upper, midpoint };

/** Deterministic alpha-cut cost profile of one path. */
struct AlphaProfile {
  std::vector<double> levels;
  EndpointMode mode = EndpointMode::lower;
  std::vector<double> costs;
};

/**
 * Aggregates the path GGFN once, then evaluates the chosen alpha-cut
 * endpoint at every level. Levels must be strictly increasing and inside
 * (0, 1) (DomainError otherwise); levels at or above the aggregated height
 * h_P are clamped to h_P * (1 - machine epsilon) rather than erroring.
 * The lower-endpoint profile is non-decreasing in alpha, the upper-endpoint
 * profile non-increasing; midpoint mode returns the core c_P exactly (the
 * cut is symmetric about it). Throws InvalidPath for inconsistent paths.
 */
AlphaProfile alpha_profile(const Network& net, const Path& p,
                           std::span<const double> levels, EndpointMode mode);

}  // namespace ggfnsp
