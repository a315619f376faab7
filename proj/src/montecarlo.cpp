#include "ggfnsp/montecarlo.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "ggfnsp/kernels.hpp"

namespace ggfnsp {
namespace {

void require_config(const SamplerConfig& cfg) {
  if (cfg.max_rejects < 1) {
    throw DomainError("max_rejects must be >= 1");
  }
}

TracedSample sample_one(const kernels::Backend& backend, const Ggfn& g,
                        Rng& rng, int max_rejects) {
  TracedSample out;
  for (;;) {
    const double u01 = rng.u01();
    const double v01 = rng.u01();
    double value = 0.0;
    backend.sample_costs(1, &g.c, &g.sigma, &u01, &v01, &value);
    if (value >= 0.0) {
      out.value = value;
      out.u = std::max(u01, DBL_EPSILON) * g.h;  // same clip as the kernel
      return out;
    }
    if (++out.rejects >= max_rejects) {
      throw RejectionExhausted(
          "rejection sampling exhausted after " + std::to_string(max_rejects) +
              " consecutive negative draws (sigma/c ratio infeasible; see "
              "nonneg_feasible)",
          -1);
    }
  }
}

}  // namespace

double sample_edge_cost(const Ggfn& g, Rng& rng, int max_rejects) {
  if (max_rejects < 1) {
    throw DomainError("max_rejects must be >= 1");
  }
  return sample_one(kernels::active(), g, rng, max_rejects).value;
}

TracedSample sample_edge_cost_traced(const Ggfn& g, Rng& rng,
                                     int max_rejects) {
  if (max_rejects < 1) {
    throw DomainError("max_rejects must be >= 1");
  }
  return sample_one(kernels::active(), g, rng, max_rejects);
}

double deviation(double z, double z0) {
  if (!(z0 > 0.0)) {
    throw DomainError("deviation reference z0 must be > 0");
  }
  return 100.0 * std::abs(z - z0) / z0;
}

DevStatsPair summarize(std::span<const ScenarioRecord> records) {
  if (records.empty()) {
    throw EmptyInput("summarize requires at least one scenario record");
  }
  const auto n = static_cast<double>(records.size());
  DevStatsPair out;
  double premium_sum = 0.0;
  const auto fill = [&](DevStats& s, auto dev_of) {
    double sum = 0.0;
    double zero_count = 0.0;
    s.max_dev = 0.0;
    for (const ScenarioRecord& r : records) {
      const double d = dev_of(r);
      sum += d;
      s.max_dev = std::max(s.max_dev, d);
      if (d == 0.0) {
        zero_count += 1.0;
      }
    }
    s.mean_dev = sum / n;
    double sq = 0.0;
    for (const ScenarioRecord& r : records) {
      const double d = dev_of(r) - s.mean_dev;
      sq += d * d;
    }
    s.std_dev = std::sqrt(sq / n);
    s.stability = zero_count / n;
  };
  fill(out.rank, [](const ScenarioRecord& r) { return r.dev_rank; });
  fill(out.core, [](const ScenarioRecord& r) { return r.dev_core; });
  for (const ScenarioRecord& r : records) {
    premium_sum += r.dev_core - r.dev_rank;
  }
  out.rank.reliability_premium = premium_sum / n;
  out.core.reliability_premium = out.rank.reliability_premium;
  return out;
}

ScenarioBatch run_scenarios(const Network& net, NodeId s, NodeId t,
                            const RiskParams& rp, std::size_t n_scenarios,
                            const SamplerConfig& cfg) {
  require_config(cfg);
  if (n_scenarios < 1) {
    throw DomainError("n_scenarios must be >= 1");
  }
  const kernels::Backend& backend = kernels::active();

  ScenarioBatch batch;
  {
    RankedResult ranked = dijkstra_ranked(net, s, t, rp);
    batch.rank_path = std::move(ranked.path);
    batch.rank_label = ranked.label;
    batch.rank_objective = ranked.objective;
  }
  {
    SolveResult core = dijkstra_crisp(net, core_edge_weights(net), s, t);
    batch.core_path = std::move(core.path);
    batch.core_objective = core.cost;
  }

  const std::size_t m = net.n_edges();
  std::vector<double> c(m);
  std::vector<double> sigma(m);
  for (std::size_t i = 0; i < m; ++i) {
    c[i] = net.edge(i).cost.c;
    sigma[i] = net.edge(i).cost.sigma;
  }

  std::vector<double> u(m);
  std::vector<double> v(m);
  std::vector<double> x(m);
  batch.records.reserve(n_scenarios);
  for (std::size_t id = 0; id < n_scenarios; ++id) {
    Rng rng(cfg.seed ^ static_cast<std::uint64_t>(id));
    for (std::size_t e = 0; e < m; ++e) {
      u[e] = rng.u01();
      v[e] = rng.u01();
    }
    backend.sample_costs(m, c.data(), sigma.data(), u.data(), v.data(),
                         x.data());
    for (std::size_t e = 0; e < m; ++e) {
      int rejects = 0;
      while (x[e] < 0.0) {
        if (++rejects >= cfg.max_rejects) {
          throw RejectionExhausted(
              "edge '" + net.label(net.edge(e).src) + "' -> '" +
                  net.label(net.edge(e).dst) + "' exhausted " +
                  std::to_string(cfg.max_rejects) +
                  " consecutive negative draws in scenario " +
                  std::to_string(id) +
                  " (sigma/c ratio infeasible; see nonneg_feasible)",
              static_cast<int>(e));
        }
        const double ue = rng.u01();
        const double ve = rng.u01();
        backend.sample_costs(1, &c[e], &sigma[e], &ue, &ve, &x[e]);
      }
    }

    ScenarioRecord rec;
    rec.scenario_id = id;
    rec.opt_cost = dijkstra_crisp(net, x, s, t).cost;
    rec.rank_cost = path_weight_sum(batch.rank_path, x);
    rec.core_cost = path_weight_sum(batch.core_path, x);
    rec.dev_rank = deviation(rec.rank_cost, rec.opt_cost);
    rec.dev_core = deviation(rec.core_cost, rec.opt_cost);
    batch.records.push_back(rec);
  }
  batch.stats = summarize(batch.records);
  return batch;
}

ReplicateResult replicate(const Network& net, NodeId s, NodeId t,
                          const RiskParams& rp, std::size_t n_rep,
                          std::size_t n_iters, const SamplerConfig& cfg,
                          const std::optional<HeightRegime>& regime) {
  require_config(cfg);
  if (n_rep < 1 || n_iters < 1) {
    throw DomainError("n_rep and n_iters must be >= 1");
  }

  ReplicateResult result;
  result.rows.reserve(n_rep);
  result.records.reserve(n_rep * n_iters);
  double mean_sum = 0.0;
  double std_sum = 0.0;

  for (std::size_t r = 0; r < n_rep; ++r) {
    const std::uint64_t rep_seed = mix(cfg.seed, r);
    SamplerConfig rep_cfg = cfg;
    rep_cfg.seed = rep_seed;

    ScenarioBatch batch;
    if (regime.has_value()) {
      Rng height_rng(mix(rep_seed, kTagHeights));
      const Network net_r = apply_regime_heights(net, *regime, height_rng);
      batch = run_scenarios(net_r, s, t, rp, n_iters, rep_cfg);
    } else {
      batch = run_scenarios(net, s, t, rp, n_iters, rep_cfg);
    }

    ReplicationRow row;
    row.rep = r + 1;
    row.rank_path = batch.rank_path;
    row.rank_objective = batch.rank_objective;
    row.stats = batch.stats;
    double sum = 0.0;
    row.max_dev = 0.0;
    std::vector<double> devs;
    devs.reserve(n_iters);
    for (const ScenarioRecord& rec : batch.records) {
      const double d = deviation(rec.opt_cost, batch.rank_objective);
      devs.push_back(d);
      sum += d;
      row.max_dev = std::max(row.max_dev, d);
    }
    row.mean_dev = sum / static_cast<double>(n_iters);
    if (n_iters > 1) {
      double sq = 0.0;
      for (double d : devs) {
        sq += (d - row.mean_dev) * (d - row.mean_dev);
      }
      row.std_dev = std::sqrt(sq / static_cast<double>(n_iters - 1));
    }
    mean_sum += row.mean_dev;
    std_sum += row.std_dev;
    result.pooled_max = std::max(result.pooled_max, row.max_dev);

    if (r == 0) {
      result.core_path = batch.core_path;
      result.core_objective = batch.core_objective;
    }
    for (ScenarioRecord rec : batch.records) {
      rec.scenario_id += r * n_iters;
      result.records.push_back(rec);
    }
    result.rows.push_back(std::move(row));
  }

  result.pooled_mean = mean_sum / static_cast<double>(n_rep);
  result.pooled_std = std_sum / static_cast<double>(n_rep);
  result.pooled = summarize(result.records);
  return result;
}

}  // namespace ggfnsp
