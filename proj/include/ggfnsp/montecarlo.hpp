#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ggfnsp/network.hpp"
#include "ggfnsp/ranking.hpp"
#include "ggfnsp/rng.hpp"
#include "ggfnsp/solver.hpp"

namespace ggfnsp {

/** Sampling configuration. Only rejection mode exists. */
struct SamplerConfig {
  std::uint64_t seed = 42;
  enum class Mode { Reject } mode = Mode::Reject;
  int max_rejects = 1000;  // must be >= 1
};

/**
 * One single-value draw from a GGFN: u ~ U(0, h) picks an alpha-cut, then a
 * uniform convex weight v picks a point in it,
 *   A = v * A_L(u) + (1 - v) * A_R(u) = c + sigma * t * (1 - 2v),
 *   t = sqrt(-2 ln(u / h)),
 * where u / h ~ U(0,1), so the crisp-cost law does not depend on h. The
 * uniform u/h is clipped below by machine epsilon (never exactly 0), and
 * negative draws are rejected by redrawing a fresh (u, v) pair. Each attempt
 * consumes exactly two stream values. After max_rejects consecutive negative
 * draws, RejectionExhausted is thrown (the sigma/c ratio makes nonnegativity
 * too unlikely; cross-reference nonneg_feasible). Evaluates the transform
 * through the active kernel backend.
 */
double sample_edge_cost(const Ggfn& g, Rng& rng, int max_rejects = 1000);

/** sample_edge_cost plus the drawn alpha level and rejection count, for
 * containment checks: membership(g, value) >= u up to rounding. */
struct TracedSample {
  double value = 0.0;
  double u = 0.0;  // the accepted draw's alpha level, in (0, h]
  int rejects = 0;
};
TracedSample sample_edge_cost_traced(const Ggfn& g, Rng& rng,
                                     int max_rejects = 1000);

/** One scenario of the robustness experiment (one crisp cost realization). */
struct ScenarioRecord {
  std::uint64_t scenario_id = 0;
  double opt_cost = 0.0;   // ex-post optimum under the sampled costs
  double rank_cost = 0.0;  // ranked baseline path evaluated at sampled costs
  double core_cost = 0.0;  // core baseline path evaluated at sampled costs
  double dev_rank = 0.0;   // deviation(rank_cost, opt_cost), percent
  double dev_core = 0.0;   // deviation(core_cost, opt_cost), percent
};

/** Absolute percentage deviation 100 * |z - z0| / z0. DomainError if
 * z0 <= 0. */
double deviation(double z, double z0);

/** Deviation statistics of one baseline over a batch of scenarios. */
struct DevStats {
  double mean_dev = 0.0;
  double std_dev = 0.0;  // population std over the scenarios
  double max_dev = 0.0;
  double stability = 0.0;  // fraction of scenarios with dev exactly 0
  double reliability_premium = 0.0;  // mean(dev_core - dev_rank), both copies
};

struct DevStatsPair {
  DevStats rank;
  DevStats core;
};

/** Per-baseline statistics over a non-empty record batch (EmptyInput
 * otherwise). reliability_premium is pair-level and identical in both. */
DevStatsPair summarize(std::span<const ScenarioRecord> records);

/** Output of run_scenarios: the records plus both Stage-1 baselines. */
struct ScenarioBatch {
  std::vector<ScenarioRecord> records;
  Path rank_path;
  PathLabel rank_label;
  double rank_objective = 0.0;  // crisp optimum of the transformed weights
  Path core_path;
  double core_objective = 0.0;  // core-weight optimum
  DevStatsPair stats;
};

/**
 * Stage 1: solve both baselines once (ranked path at rp.kappa, core path on
 * cores). Stage 2: for scenario id in [0, n_scenarios), seed a fresh stream
 * with cfg.seed XOR id and sample every edge in ascending edge-index order
 * (one interleaved (u, v) pair per edge, then ascending redraws for rejected
 * edges — identical stream consumption to per-edge serial sampling whenever
 * nothing is rejected); solve the crisp problem for opt_cost and evaluate
 * both fixed baseline paths under the same sampled costs. Deterministic for
 * a fixed config and backend. Throws Unreachable when t is not reachable,
 * DomainError for invalid parameters, RejectionExhausted (carrying the edge
 * index) when an edge exhausts its rejection budget.
 */
ScenarioBatch run_scenarios(const Network& net, NodeId s, NodeId t,
                            const RiskParams& rp, std::size_t n_scenarios,
                            const SamplerConfig& cfg);

/**
 * One outer replication row: mean / sample-std / max over the replication's
 * scenarios of the deviation of the ex-post optimum from the ranked-baseline
 * objective,
 *   Dev_i = deviation(opt_cost_i, rank_objective),
 * plus that replication's baselines and the usual per-baseline stats.
 */
struct ReplicationRow {
  std::size_t rep = 0;  // 1-based
  double mean_dev = 0.0;
  double std_dev = 0.0;  // sample std (n-1); 0 when n_iters == 1
  double max_dev = 0.0;
  Path rank_path;
  double rank_objective = 0.0;
  DevStatsPair stats;
};

struct ReplicateResult {
  std::vector<ReplicationRow> rows;
  double pooled_mean = 0.0;  // mean of the replication means
  double pooled_std = 0.0;   // mean of the replication stds
  double pooled_max = 0.0;   // max of the replication maxima
  DevStatsPair pooled;       // summarize() over all records
  Path core_path;            // regime-independent
  double core_objective = 0.0;
  std::vector<ScenarioRecord> records;  // all replications, globally numbered
};

/**
 * n_rep outer replications of n_iters scenarios each. Replication r (0-based)
 * uses sub-seed mix(cfg.seed, r); mix(seed, 0) == seed, so n_rep = 1 without
 * a regime reproduces run_scenarios bit-for-bit. When a regime is given,
 * every replication first redraws all edge heights from it (sub-stream
 * mix(rep_seed, kTagHeights)) and recomputes the ranked baseline on the
 * redrawn heights; the core baseline is height-independent and stays fixed.
 * Scenario ids are renumbered globally (rep * n_iters + i).
 */
ReplicateResult replicate(const Network& net, NodeId s, NodeId t,
                          const RiskParams& rp, std::size_t n_rep,
                          std::size_t n_iters, const SamplerConfig& cfg,
                          const std::optional<HeightRegime>& regime =
                              std::nullopt);

}  // namespace ggfnsp
