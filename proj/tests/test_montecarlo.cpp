#include <cmath>
#include <vector>

#include "doctest.h"
#include "ggfnsp/errors.hpp"
#include "ggfnsp/montecarlo.hpp"
#include "helpers.hpp"

using namespace ggfnsp;
using ggfnsp::test::load_fixture;
using ggfnsp::test::node;

TEST_CASE("sampling a crisp number returns its core") {
  const Ggfn crisp(7.5, 0.0, 0.6);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_edge_cost(crisp, rng) == 7.5);
  }
}

TEST_CASE("sampled cost law is deterministic and height-free") {
  const Ggfn tall(10.0, 2.0, 0.95);
  const Ggfn flat(10.0, 2.0, 0.15);
  Rng r1(5);
  Rng r2(5);
  Rng r3(5);
  for (int i = 0; i < 500; ++i) {
    const double a = sample_edge_cost(tall, r1);
    const double b = sample_edge_cost(tall, r2);
    const double c = sample_edge_cost(flat, r3);
    CHECK(a == b);  // same seed, same stream, same value
    CHECK(a == c);  // the height cancels out of the crisp law
    CHECK(a >= 0.0);
  }
}

TEST_CASE("traced samples lie inside their own alpha-cut") {
  const Ggfn g(12.0, 3.0, 0.7);
  Rng rng(17);
  int total_rejects = 0;
  for (int i = 0; i < 2000; ++i) {
    const TracedSample s = sample_edge_cost_traced(g, rng);
    CHECK(s.u > 0.0);
    CHECK(s.u <= g.h);
    total_rejects += s.rejects;
    // Membership at the sampled point is at least the drawn alpha level.
    CHECK(membership(g, s.value) >= s.u - 1e-12 * s.u);
  }
  // c/sigma = 4: P(negative draw) ~ 1e-5, so rejections are possible but
  // must stay negligible over 2000 draws.
  CHECK(total_rejects <= 5);
}

TEST_CASE("sample moments match the transform law") {
  // A = c + sigma * t * (1 - 2v) with t^2 ~ Exp(1/2) and v uniform gives
  // E[A] = c and Var[A] = (2/3) sigma^2.
  const Ggfn g(10.0, 2.0, 0.8);
  Rng rng(23);
  const int n = 40000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_edge_cost(g, rng);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean - 10.0) < 0.04);           // ~5 standard errors
  CHECK(std::abs(var - 8.0 / 3.0) < 0.15);
}

TEST_CASE("rejection redraws negatives and can exhaust a tiny budget") {
  // c/sigma = 0.05: roughly half of all draws are negative.
  const Ggfn hard(0.5, 10.0, 0.9);

  SUBCASE("default budget never exhausts in practice") {
    Rng rng(3);
    for (int i = 0; i < 5000; ++i) {
      CHECK(sample_edge_cost(hard, rng) >= 0.0);
    }
  }
  SUBCASE("max_rejects = 1 exhausts within a few seeds") {
    bool threw = false;
    for (std::uint64_t seed = 0; seed < 100 && !threw; ++seed) {
      Rng rng(seed);
      try {
        for (int i = 0; i < 10; ++i) {
          sample_edge_cost(hard, rng, 1);
        }
      } catch (const RejectionExhausted& e) {
        threw = true;
        CHECK(e.edge_index() == -1);
      }
    }
    CHECK(threw);
  }
  SUBCASE("budget must be positive") {
    Rng rng(1);
    CHECK_THROWS_AS(sample_edge_cost(hard, rng, 0), DomainError);
    CHECK_THROWS_AS(sample_edge_cost_traced(hard, rng, -3), DomainError);
  }
}

TEST_CASE("deviation is absolute percentage error") {
  CHECK(deviation(100.0, 100.0) == 0.0);
  CHECK(deviation(110.0, 100.0) == doctest::Approx(10.0));
  CHECK(deviation(90.0, 100.0) == doctest::Approx(10.0));
  CHECK(deviation(189.247, 179.254) == doctest::Approx(5.574).epsilon(2e-3));
  CHECK_THROWS_AS(deviation(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(deviation(1.0, -5.0), DomainError);
}

TEST_CASE("summarize computes per-baseline statistics by hand") {
  std::vector<ScenarioRecord> recs(3);
  recs[0].dev_rank = 0.0;
  recs[1].dev_rank = 10.0;
  recs[2].dev_rank = 20.0;
  recs[0].dev_core = 5.0;
  recs[1].dev_core = 10.0;
  recs[2].dev_core = 15.0;
  const DevStatsPair s = summarize(recs);
  CHECK(s.rank.mean_dev == doctest::Approx(10.0));
  CHECK(s.rank.std_dev == doctest::Approx(std::sqrt(200.0 / 3.0)));
  CHECK(s.rank.max_dev == 20.0);
  CHECK(s.rank.stability == doctest::Approx(1.0 / 3.0));
  CHECK(s.core.mean_dev == doctest::Approx(10.0));
  CHECK(s.core.std_dev == doctest::Approx(std::sqrt(50.0 / 3.0)));
  CHECK(s.core.max_dev == 15.0);
  CHECK(s.core.stability == 0.0);
  // Premium is a pair-level quantity: mean(dev_core - dev_rank), both copies.
  CHECK(s.rank.reliability_premium == doctest::Approx(0.0));
  CHECK(s.core.reliability_premium == s.rank.reliability_premium);
  CHECK_THROWS_AS(summarize({}), EmptyInput);
}

TEST_CASE("run_scenarios: baselines, invariants and reproducibility") {
  const Network net = load_fixture("hasuike_high.csv");
  const NodeId s = node(net, "A");
  const NodeId t = node(net, "G");
  const RiskParams rp{1.0};
  SamplerConfig cfg;
  cfg.seed = 42;
  const ScenarioBatch batch = run_scenarios(net, s, t, rp, 64, cfg);

  // Stage-1 baselines equal the direct solves.
  const RankedResult ranked = dijkstra_ranked(net, s, t, rp);
  const SolveResult core = dijkstra_crisp(net, core_edge_weights(net), s, t);
  CHECK(batch.rank_path.nodes == ranked.path.nodes);
  CHECK(batch.rank_objective == ranked.objective);
  CHECK(batch.core_path.nodes == core.path.nodes);
  CHECK(batch.core_objective == core.cost);

  REQUIRE(batch.records.size() == 64);
  double seen_positive_dev = 0.0;
  for (std::size_t i = 0; i < batch.records.size(); ++i) {
    const ScenarioRecord& r = batch.records[i];
    CHECK(r.scenario_id == i);
    CHECK(r.opt_cost > 0.0);
    // The ex-post optimum never exceeds a fixed path's realized cost.
    CHECK(r.opt_cost <= r.rank_cost);
    CHECK(r.opt_cost <= r.core_cost);
    CHECK(r.dev_rank == deviation(r.rank_cost, r.opt_cost));
    CHECK(r.dev_core == deviation(r.core_cost, r.opt_cost));
    seen_positive_dev += r.dev_rank > 0.0;
  }
  CHECK(seen_positive_dev > 0.0);  // the baseline is not always ex-post optimal

  // The attached stats are exactly summarize(records).
  const DevStatsPair direct = summarize(batch.records);
  CHECK(batch.stats.rank.mean_dev == direct.rank.mean_dev);
  CHECK(batch.stats.core.std_dev == direct.core.std_dev);
  CHECK(batch.stats.rank.reliability_premium ==
        direct.rank.reliability_premium);

  // Bit-for-bit reproducible for a fixed config; different seeds differ.
  const ScenarioBatch again = run_scenarios(net, s, t, rp, 64, cfg);
  REQUIRE(again.records.size() == batch.records.size());
  for (std::size_t i = 0; i < batch.records.size(); ++i) {
    CHECK(again.records[i].opt_cost == batch.records[i].opt_cost);
    CHECK(again.records[i].rank_cost == batch.records[i].rank_cost);
    CHECK(again.records[i].core_cost == batch.records[i].core_cost);
  }
  SamplerConfig other = cfg;
  other.seed = 43;
  const ScenarioBatch shifted = run_scenarios(net, s, t, rp, 64, other);
  bool any_diff = false;
  for (std::size_t i = 0; i < batch.records.size(); ++i) {
    any_diff = any_diff || shifted.records[i].opt_cost !=
                               batch.records[i].opt_cost;
  }
  CHECK(any_diff);
}

TEST_CASE("run_scenarios parameter validation") {
  const Network net = load_fixture("hasuike_high.csv");
  SamplerConfig cfg;
  CHECK_THROWS_AS(run_scenarios(net, 0, 6, RiskParams{1.0}, 0, cfg),
                  DomainError);
  SamplerConfig bad = cfg;
  bad.max_rejects = 0;
  CHECK_THROWS_AS(run_scenarios(net, 0, 6, RiskParams{1.0}, 4, bad),
                  DomainError);
  CHECK_THROWS_AS(run_scenarios(net, 6, 0, RiskParams{1.0}, 4, cfg),
                  Unreachable);
}

TEST_CASE("a single-path network is perfectly stable") {
  const Network net = parse_edge_list(
      "source,target,core_c,sigma,height_h\n"
      "a,b,10,2,0.8\n"
      "b,c,5,1,0.6\n");
  SamplerConfig cfg;
  const ScenarioBatch batch =
      run_scenarios(net, 0, node(net, "c"), RiskParams{1.0}, 32, cfg);
  for (const ScenarioRecord& r : batch.records) {
    CHECK(r.opt_cost == r.rank_cost);
    CHECK(r.opt_cost == r.core_cost);
    CHECK(r.dev_rank == 0.0);
    CHECK(r.dev_core == 0.0);
  }
  CHECK(batch.stats.rank.stability == 1.0);
  CHECK(batch.stats.core.stability == 1.0);
  CHECK(batch.stats.rank.mean_dev == 0.0);
  CHECK(batch.stats.rank.reliability_premium == 0.0);
}

TEST_CASE("run_scenarios surfaces the offending edge on exhaustion") {
  // Second edge is near-infeasible (c/sigma = 0.05); a budget of 1 dies fast.
  const Network net = parse_edge_list(
      "source,target,core_c,sigma,height_h\n"
      "a,b,10,1,0.9\n"
      "b,c,0.5,10,0.9\n");
  SamplerConfig cfg;
  cfg.max_rejects = 1;
  bool threw = false;
  for (std::uint64_t seed = 0; seed < 100 && !threw; ++seed) {
    cfg.seed = seed;
    try {
      run_scenarios(net, 0, node(net, "c"), RiskParams{1.0}, 10, cfg);
    } catch (const RejectionExhausted& e) {
      threw = true;
      CHECK(e.edge_index() == 1);
      const std::string what = e.what();
      CHECK(what.find("'b'") != std::string::npos);
      CHECK(what.find("'c'") != std::string::npos);
    }
  }
  CHECK(threw);
}

TEST_CASE("replicate with one replication reproduces run_scenarios") {
  const Network net = load_fixture("hasuike_moderate.csv");
  const NodeId s = node(net, "A");
  const NodeId t = node(net, "G");
  const RiskParams rp{1.0};
  SamplerConfig cfg;
  cfg.seed = 42;  // mix(seed, 0) == seed, so the streams coincide

  const ScenarioBatch batch = run_scenarios(net, s, t, rp, 40, cfg);
  const ReplicateResult rep = replicate(net, s, t, rp, 1, 40, cfg);
  REQUIRE(rep.rows.size() == 1);
  REQUIRE(rep.records.size() == 40);
  for (std::size_t i = 0; i < 40; ++i) {
    CHECK(rep.records[i].opt_cost == batch.records[i].opt_cost);
    CHECK(rep.records[i].rank_cost == batch.records[i].rank_cost);
    CHECK(rep.records[i].core_cost == batch.records[i].core_cost);
    CHECK(rep.records[i].scenario_id == i);
  }
  CHECK(rep.rows[0].rep == 1);
  CHECK(rep.rows[0].rank_objective == batch.rank_objective);
  CHECK(rep.core_objective == batch.core_objective);

  // Row statistics use the replication-level deviation definition.
  double sum = 0.0;
  double max_dev = 0.0;
  for (const ScenarioRecord& r : batch.records) {
    const double d = deviation(r.opt_cost, batch.rank_objective);
    sum += d;
    max_dev = std::max(max_dev, d);
  }
  CHECK(rep.rows[0].mean_dev == doctest::Approx(sum / 40.0).epsilon(1e-15));
  CHECK(rep.rows[0].max_dev == max_dev);
  CHECK(rep.pooled_mean == rep.rows[0].mean_dev);
  CHECK(rep.pooled_max == rep.rows[0].max_dev);
}

TEST_CASE("replicate pools rows and renumbers records globally") {
  const Network net = load_fixture("hasuike_high.csv");
  const NodeId s = node(net, "A");
  const NodeId t = node(net, "G");
  SamplerConfig cfg;
  const ReplicateResult rep =
      replicate(net, s, t, RiskParams{1.0}, 3, 16, cfg);
  REQUIRE(rep.rows.size() == 3);
  REQUIRE(rep.records.size() == 48);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(rep.rows[r].rep == r + 1);
    CHECK(rep.rows[r].std_dev >= 0.0);
  }
  for (std::size_t k = 0; k < rep.records.size(); ++k) {
    CHECK(rep.records[k].scenario_id == k);
  }
  CHECK(rep.pooled_mean ==
        doctest::Approx((rep.rows[0].mean_dev + rep.rows[1].mean_dev +
                         rep.rows[2].mean_dev) /
                        3.0)
            .epsilon(1e-15));
  CHECK(rep.pooled_max == std::max({rep.rows[0].max_dev, rep.rows[1].max_dev,
                                    rep.rows[2].max_dev}));
  const DevStatsPair direct = summarize(rep.records);
  CHECK(rep.pooled.rank.mean_dev == direct.rank.mean_dev);
  CHECK(rep.pooled.core.max_dev == direct.core.max_dev);
  CHECK_THROWS_AS(replicate(net, s, t, RiskParams{1.0}, 0, 16, cfg),
                  DomainError);
  CHECK_THROWS_AS(replicate(net, s, t, RiskParams{1.0}, 3, 0, cfg),
                  DomainError);
}

TEST_CASE("regime replication redraws heights per replication") {
  const Network net = load_fixture("hasuike_high.csv");
  const NodeId s = node(net, "A");
  const NodeId t = node(net, "G");
  const RiskParams rp{1.0};
  SamplerConfig cfg;
  cfg.seed = 42;

  const ReplicateResult low =
      replicate(net, s, t, rp, 4, 25, cfg, HeightRegime::low());
  const ReplicateResult low2 =
      replicate(net, s, t, rp, 4, 25, cfg, HeightRegime::low());
  const ReplicateResult high =
      replicate(net, s, t, rp, 4, 25, cfg, HeightRegime::high());

  // Deterministic under a fixed config.
  CHECK(low.pooled_mean == low2.pooled_mean);
  CHECK(low.pooled.rank.mean_dev == low2.pooled.rank.mean_dev);

  // Heights differ per replication, so the ranked objective varies by row;
  // the regime changes it too.
  bool objective_varies = false;
  for (std::size_t r = 1; r < low.rows.size(); ++r) {
    objective_varies =
        objective_varies ||
        low.rows[r].rank_objective != low.rows[0].rank_objective;
  }
  CHECK(objective_varies);
  CHECK(low.rows[0].rank_objective != high.rows[0].rank_objective);

  // The core baseline ignores heights entirely.
  CHECK(low.core_objective == high.core_objective);
  CHECK(low.core_objective == 60.0);
  CHECK(low.core_path.nodes == high.core_path.nodes);

  // Crisp sampling is height-free, so the core-path deviations coincide
  // across regimes scenario by scenario (same sampling sub-streams).
  REQUIRE(low.records.size() == high.records.size());
  for (std::size_t k = 0; k < low.records.size(); ++k) {
    CHECK(low.records[k].core_cost == high.records[k].core_cost);
    CHECK(low.records[k].opt_cost == high.records[k].opt_cost);
  }
}
