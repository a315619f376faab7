#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ggfnsp/network.hpp"
#include "ggfnsp/ranking.hpp"

namespace ggfnsp {

/**
 * Simple directed path: nodes[i] -> nodes[i+1] via edges[i]. A single node
 * with no edges is the trivial path from a node to itself.
 */
struct Path {
  std::vector<NodeId> nodes;
  std::vector<std::uint32_t> edges;
};

/**
 * Path-level GGFN parameters plus the ranking score at the query's kappa:
 * (c_p, sigma_p, h_p) = fold_sum over the member edges, score = R^cost.
 */
struct PathLabel {
  double c_p = 0.0;
  double sigma_p = 0.0;
  double h_p = 1.0;
  double score = 0.0;
};

/** Result of a crisp solve: minimum-weight path and its weight. */
struct SolveResult {
  Path path;
  double cost = 0.0;
};

/**
 * Result of a ranked solve. `objective` is the crisp optimum over the
 * transformed per-edge weights (the canonical ordering value, accumulated
 * left to right along the path); by ranking additivity it agrees with
 * label.score to ~1e-10, but the two are computed differently and both are
 * reported.
 */
struct RankedResult {
  Path path;
  PathLabel label;
  double objective = 0.0;
};

/** Objective for the exhaustive oracle. */
enum class Objective { core, ranked };

/**
 * Dijkstra over caller-supplied nonnegative per-edge weights (binary heap,
 * lazy deletion). Deterministic tie-break: among equal-cost s-t paths the
 * lexicographically smallest node sequence is returned; this is guaranteed
 * for strictly positive weights (every call site in this library has
 * weights >= c > 0) and the result is still deterministic when zero weights
 * are present. The reported cost accumulates weights left to right along
 * the returned path. Throws Unreachable when no s-t path exists,
 * DomainError for invalid endpoints, weight-vector size mismatch, or
 * negative/non-finite weights.
 */
SolveResult dijkstra_crisp(const Network& net, std::span<const double> weights,
                           NodeId s, NodeId t);

/**
 * Ranked shortest path: minimizes R^cost of the path-aggregated GGFN. By
 * ranking additivity this is crisp Dijkstra on per-edge weights
 *   w_e = c_e - kappa * sigma_e * log10(h_e)  (all > 0 since h <= 1),
 * and the implementation carries the aggregated (c, sigma, h) triple so the
 * returned label is exact, not reconstructed from the score.
 */
RankedResult dijkstra_ranked(const Network& net, NodeId s, NodeId t,
                             const RiskParams& rp = {});

/**
 * Aggregates a path's edge GGFNs via fold_sum and attaches the R^cost score
 * at the supplied kappa. The trivial single-node path aggregates to the
 * additive identity (0, 0, 1). Throws InvalidPath when the node/edge
 * sequences are inconsistent with the network or the path is not simple.
 */
PathLabel path_aggregate(const Network& net, const Path& p,
                         const RiskParams& rp = {});

/**
 * Exhaustive oracle: enumerates every simple s-t path and returns the
 * objective-minimal one, ties broken exactly like the solvers
 * (lexicographically smallest node sequence). Guarded: networks with more
 * than 12 nodes may enumerate at most 1e5 paths (and 1e7 DFS steps) before
 * TooLarge is thrown. Throws Unreachable when no path exists.
 */
SolveResult enumerate_best(const Network& net, NodeId s, NodeId t,
                           Objective objective, const RiskParams& rp = {});

/** Per-edge ranked weights w_e = c_e - kappa*sigma_e*log10(h_e), via the
 * active kernel backend. */
std::vector<double> ranked_edge_weights(const Network& net,
                                        const RiskParams& rp = {});

/** Per-edge core weights w_e = c_e. */
std::vector<double> core_edge_weights(const Network& net);

/** Left-to-right sum of the path's edge weights — the same accumulation
 * order the solvers use, so results compare bit-for-bit. */
double path_weight_sum(const Path& p, std::span<const double> weights);

}  // namespace ggfnsp
