// ggfnsp command-line front end: solve / simulate / scale / profile /
// generate. Every output file embeds the run manifest ('#' comment line in
// CSVs, "manifest" object in JSON) so a run can be reproduced from its
// artifact alone. Exit codes: 0 success, 1 input or validation error,
// 2 unreachable target, 3 sampling infeasibility.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ggfnsp/alloc_probe.hpp"
#include "ggfnsp/bench.hpp"
#include "ggfnsp/kernels.hpp"
#include "ggfnsp/montecarlo.hpp"
#include "ggfnsp/network.hpp"
#include "ggfnsp/ranking.hpp"
#include "ggfnsp/solver.hpp"
#include "ggfnsp/version.hpp"
#include "json.hpp"

namespace {

using ggfnsp::Network;
using ggfnsp::NodeId;
using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ggfnsp::Error("cannot open input file '" + path + "'");
  }
  return ggfnsp::parse_edge_list(in);
}

NodeId require_label(const Network& net, const std::string& label,
                     const char* role) {
  if (auto id = net.find_node(label)) {
    return *id;
  }
  throw ggfnsp::ValidationError(std::string(role) + " label '" + label +
                                "' not found in the network");
}

std::string format_path(const Network& net, const ggfnsp::Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    if (i > 0) {
      out += '-';
    }
    out += net.label(p.nodes[i]);
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ggfnsp::Error("cannot open output file '" + path + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Run manifest
// ---------------------------------------------------------------------------
struct Manifest {
  std::string command;
  std::string input_path;
  std::uint64_t seed = 0;
  double kappa = 1.0;
  std::string regime;  // empty = fixed heights from the input file
  Json params = Json::object();

  Json to_json() const {
    Json j = Json::object();
    j["command"] = command;
    j["tool_version"] = ggfnsp::kVersion;
    j["input_path"] = input_path;
    j["seed"] = seed;
    j["kappa"] = kappa;
    j["regime"] = regime;
    j["params"] = params;
    return j;
  }

  std::string comment_line() const {
    return "# ggfnsp manifest: " + to_json().dump();
  }
};

// ---------------------------------------------------------------------------
// Shared flag bundles
// ---------------------------------------------------------------------------
struct CommonOpts {
  std::string input;
  std::string source;
  std::string target;
  double kappa = 1.0;
  std::string out;
};

struct SimulateOpts {
  CommonOpts common;
  std::uint64_t seed = 42;
  std::size_t n_rep = 10;
  std::size_t n_iters = 1000;
  int max_rejects = 1000;
  std::string regime;  // empty = keep input heights fixed
  double eps = 0.2;
  std::string stats_out;
};

struct ScaleOpts {
  std::string input;
  std::size_t parts = 8;
  std::size_t repeats = 3;
  double kappa = 1.0;
  std::string out;
};

struct ProfileOpts {
  CommonOpts common;
  std::vector<double> levels;
  std::string mode = "lower";
};

struct GenerateOpts {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::string regime = "high";
  double eps = 0.2;
  double sigma_factor = 0.4;
  double core_min = 5.0;
  double core_max = 50.0;
  std::uint64_t seed = 42;
  std::string out;
};

Json dev_stats_json(const ggfnsp::DevStats& s) {
  Json j = Json::object();
  j["mean_dev"] = s.mean_dev;
  j["std_dev"] = s.std_dev;
  j["max_dev"] = s.max_dev;
  j["stability"] = s.stability;
  j["reliability_premium"] = s.reliability_premium;
  return j;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------
int cmd_solve(const CommonOpts& opt) {
  const Network net = load_network(opt.input);
  const NodeId s = require_label(net, opt.source, "source");
  const NodeId t = require_label(net, opt.target, "target");
  const ggfnsp::RiskParams rp{opt.kappa};

  const ggfnsp::RankedResult ranked = ggfnsp::dijkstra_ranked(net, s, t, rp);
  const ggfnsp::SolveResult core =
      ggfnsp::dijkstra_crisp(net, ggfnsp::core_edge_weights(net), s, t);
  const bool coincide = ranked.path.nodes == core.path.nodes;

  std::cout << "ranked path: " << format_path(net, ranked.path) << "\n"
            << "  label: c_p=" << fmt(ranked.label.c_p)
            << " sigma_p=" << fmt(ranked.label.sigma_p)
            << " h_p=" << fmt(ranked.label.h_p)
            << " score=" << fmt(ranked.label.score) << "\n"
            << "  objective: " << fmt(ranked.objective) << "\n"
            << "core path: " << format_path(net, core.path) << "\n"
            << "  cost: " << fmt(core.cost) << "\n"
            << "paths coincide: " << (coincide ? "yes" : "no") << "\n";

  if (!opt.out.empty()) {
    Manifest man;
    man.command = "solve";
    man.input_path = opt.input;
    man.kappa = opt.kappa;
    man.params["source"] = opt.source;
    man.params["target"] = opt.target;

    Json j = Json::object();
    j["manifest"] = man.to_json();
    j["ranked"] = {{"path", format_path(net, ranked.path)},
                   {"c_p", ranked.label.c_p},
                   {"sigma_p", ranked.label.sigma_p},
                   {"h_p", ranked.label.h_p},
                   {"score", ranked.label.score},
                   {"objective", ranked.objective}};
    j["core"] = {{"path", format_path(net, core.path)}, {"cost", core.cost}};
    j["paths_coincide"] = coincide;
    auto out = open_out(opt.out);
    out << j.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------
int cmd_simulate(const SimulateOpts& opt) {
  const Network net = load_network(opt.common.input);
  const NodeId s = require_label(net, opt.common.source, "source");
  const NodeId t = require_label(net, opt.common.target, "target");
  const ggfnsp::RiskParams rp{opt.common.kappa};
  const ggfnsp::SamplerConfig cfg{opt.seed, ggfnsp::SamplerConfig::Mode::Reject,
                                  opt.max_rejects};
  std::optional<ggfnsp::HeightRegime> regime;
  if (!opt.regime.empty()) {
    regime = ggfnsp::HeightRegime::from_name(opt.regime, opt.eps);
  }

  const ggfnsp::ReplicateResult res =
      ggfnsp::replicate(net, s, t, rp, opt.n_rep, opt.n_iters, cfg, regime);

  Manifest man;
  man.command = "simulate";
  man.input_path = opt.common.input;
  man.seed = opt.seed;
  man.kappa = opt.common.kappa;
  man.regime = opt.regime;
  man.params["source"] = opt.common.source;
  man.params["target"] = opt.common.target;
  man.params["n_rep"] = opt.n_rep;
  man.params["n_iters"] = opt.n_iters;
  man.params["max_rejects"] = opt.max_rejects;
  if (!opt.regime.empty()) {
    man.params["eps"] = opt.eps;
  }

  std::cout << "replications: " << opt.n_rep << " x " << opt.n_iters
            << " scenarios, seed " << opt.seed << "\n"
            << "core path: " << format_path(net, res.core_path)
            << " (core cost " << fmt(res.core_objective) << ")\n"
            << "pooled dev of ex-post optimum vs ranked objective: mean="
            << fmt(res.pooled_mean) << "% std=" << fmt(res.pooled_std)
            << "% max=" << fmt(res.pooled_max) << "%\n"
            << "pooled baseline devs: rank mean="
            << fmt(res.pooled.rank.mean_dev)
            << "% (stability " << fmt(res.pooled.rank.stability)
            << "), core mean=" << fmt(res.pooled.core.mean_dev)
            << "% (stability " << fmt(res.pooled.core.stability)
            << "), premium=" << fmt(res.pooled.rank.reliability_premium)
            << "%\n";

  if (!opt.common.out.empty()) {
    auto out = open_out(opt.common.out);
    out << man.comment_line() << '\n'
        << "scenario,opt_cost,rank_cost,core_cost,dev_rank,dev_core\n";
    for (const ggfnsp::ScenarioRecord& r : res.records) {
      out << r.scenario_id << ',' << fmt(r.opt_cost) << ',' << fmt(r.rank_cost)
          << ',' << fmt(r.core_cost) << ',' << fmt(r.dev_rank) << ','
          << fmt(r.dev_core) << '\n';
    }
  }

  if (!opt.stats_out.empty()) {
    Json j = Json::object();
    j["manifest"] = man.to_json();
    j["core_baseline"] = {{"path", format_path(net, res.core_path)},
                          {"cost", res.core_objective}};
    j["pooled"] = Json::object();
    j["pooled"]["dev_opt"] = {{"mean", res.pooled_mean},
                              {"std", res.pooled_std},
                              {"max", res.pooled_max}};
    j["pooled"]["rank"] = dev_stats_json(res.pooled.rank);
    j["pooled"]["core"] = dev_stats_json(res.pooled.core);
    j["replications"] = Json::array();
    for (const ggfnsp::ReplicationRow& row : res.rows) {
      Json r = Json::object();
      r["rep"] = row.rep;
      r["mean_dev"] = row.mean_dev;
      r["std_dev"] = row.std_dev;
      r["max_dev"] = row.max_dev;
      r["rank_path"] = format_path(net, row.rank_path);
      r["rank_objective"] = row.rank_objective;
      r["rank"] = dev_stats_json(row.stats.rank);
      r["core"] = dev_stats_json(row.stats.core);
      j["replications"].push_back(std::move(r));
    }
    auto out = open_out(opt.stats_out);
    out << j.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// scale
// ---------------------------------------------------------------------------
int cmd_scale(const ScaleOpts& opt) {
  const Network net = load_network(opt.input);
  const ggfnsp::RiskParams rp{opt.kappa};
  const std::vector<ggfnsp::ScalingRow> rows =
      ggfnsp::run_scaling(net, opt.parts, opt.repeats, rp);

  Manifest man;
  man.command = "scale";
  man.input_path = opt.input;
  man.kappa = opt.kappa;
  man.params["parts"] = opt.parts;
  man.params["repeats"] = opt.repeats;

  std::ostringstream body;
  body << "N,m,t_dst,time_s,peak_mem_mb\n";
  for (const ggfnsp::ScalingRow& row : rows) {
    body << row.n_nodes << ',' << row.m_edges << ',' << row.t_dst << ',';
    if (row.skipped) {
      body << ",\n";  // skip marker: empty time and memory fields
    } else {
      body << fmt(row.t_median_s) << ','
           << fmt(static_cast<double>(row.peak_mem_bytes) / (1024.0 * 1024.0))
           << '\n';
    }
  }

  std::cout << body.str();
  if (!opt.out.empty()) {
    auto out = open_out(opt.out);
    out << man.comment_line() << '\n' << body.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// profile
// ---------------------------------------------------------------------------
int cmd_profile(const ProfileOpts& opt) {
  const Network net = load_network(opt.common.input);
  const NodeId s = require_label(net, opt.common.source, "source");
  const NodeId t = require_label(net, opt.common.target, "target");
  const ggfnsp::RiskParams rp{opt.common.kappa};

  ggfnsp::EndpointMode mode;
  if (opt.mode == "lower") {
    mode = ggfnsp::EndpointMode::lower;
  } else if (opt.mode == "upper") {
    mode = ggfnsp::EndpointMode::upper;
  } else if (opt.mode == "midpoint") {
    mode = ggfnsp::EndpointMode::midpoint;
  } else {
    throw ggfnsp::DomainError("unknown endpoint mode '" + opt.mode +
                              "' (expected lower, upper, or midpoint)");
  }

  std::vector<double> levels = opt.levels;
  if (levels.empty()) {
    for (int i = 1; i <= 19; ++i) {
      levels.push_back(0.05 * i);  // 0.05 .. 0.95
    }
  }

  const ggfnsp::RankedResult ranked = ggfnsp::dijkstra_ranked(net, s, t, rp);
  const ggfnsp::AlphaProfile profile =
      ggfnsp::alpha_profile(net, ranked.path, levels, mode);

  Manifest man;
  man.command = "profile";
  man.input_path = opt.common.input;
  man.kappa = opt.common.kappa;
  man.params["source"] = opt.common.source;
  man.params["target"] = opt.common.target;
  man.params["mode"] = opt.mode;
  man.params["path"] = format_path(net, ranked.path);

  std::ostringstream body;
  body << "alpha,cost\n";
  for (std::size_t i = 0; i < profile.levels.size(); ++i) {
    body << fmt(profile.levels[i]) << ',' << fmt(profile.costs[i]) << '\n';
  }

  std::cout << "profiled path: " << format_path(net, ranked.path) << " (h_p="
            << fmt(ranked.label.h_p) << ")\n"
            << body.str();
  if (!opt.common.out.empty()) {
    auto out = open_out(opt.common.out);
    out << man.comment_line() << '\n' << body.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------
int cmd_generate(const GenerateOpts& opt) {
  ggfnsp::GenParams params;
  params.n_nodes = opt.nodes;
  params.n_edges = opt.edges;
  params.regime = ggfnsp::HeightRegime::from_name(opt.regime, opt.eps);
  params.sigma_factor = opt.sigma_factor;
  params.core_range = ggfnsp::Interval{opt.core_min, opt.core_max};
  params.seed = opt.seed;

  const Network net = ggfnsp::generate_instance(params);

  Manifest man;
  man.command = "generate";
  man.seed = opt.seed;
  man.regime = opt.regime;
  man.params["nodes"] = opt.nodes;
  man.params["edges"] = opt.edges;
  man.params["eps"] = opt.eps;
  man.params["sigma_factor"] = opt.sigma_factor;
  man.params["core_min"] = opt.core_min;
  man.params["core_max"] = opt.core_max;

  std::cout << "generated " << net.n_nodes() << " nodes, " << net.n_edges()
            << " edges (regime " << opt.regime << ", seed " << opt.seed
            << ")\n";
  if (!opt.out.empty()) {
    const std::vector<std::string> preamble{
        man.comment_line().substr(2)};  // write_edge_list adds its own "# "
    auto out = open_out(opt.out);
    ggfnsp::write_edge_list(net, out, preamble);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ggfnsp: shortest paths on networks with generalized Gaussian "
               "fuzzy edge costs"};
  app.set_version_flag("--version", ggfnsp::kVersion);
  app.require_subcommand(1);

  CommonOpts solve_opt;
  CLI::App* solve = app.add_subcommand(
      "solve", "Compute the ranked and core baseline paths");
  solve->add_option("--input", solve_opt.input, "edge-list CSV")->required();
  solve->add_option("--source", solve_opt.source, "source node label")
      ->required();
  solve->add_option("--target", solve_opt.target, "target node label")
      ->required();
  solve->add_option("--kappa", solve_opt.kappa, "risk-attitude weight");
  solve->add_option("--out", solve_opt.out, "optional JSON report path");

  SimulateOpts sim_opt;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo robustness experiment");
  simulate->add_option("--input", sim_opt.common.input, "edge-list CSV")
      ->required();
  simulate->add_option("--source", sim_opt.common.source, "source node label")
      ->required();
  simulate->add_option("--target", sim_opt.common.target, "target node label")
      ->required();
  simulate->add_option("--kappa", sim_opt.common.kappa, "risk-attitude weight");
  simulate->add_option("--seed", sim_opt.seed, "master PRNG seed");
  simulate->add_option("--n-rep", sim_opt.n_rep, "outer replications");
  simulate->add_option("--n-iters", sim_opt.n_iters,
                       "scenarios per replication");
  simulate->add_option("--max-rejects", sim_opt.max_rejects,
                       "rejection budget per edge draw");
  simulate->add_option(
      "--regime", sim_opt.regime,
      "redraw heights per replication: high|moderate|low|mixed "
      "(omit to keep the input file's heights fixed)");
  simulate->add_option("--eps", sim_opt.eps, "mixed-regime flip fraction");
  simulate->add_option("--out", sim_opt.common.out, "scenario CSV path");
  simulate->add_option("--stats-out", sim_opt.stats_out, "stats JSON path");

  ScaleOpts scale_opt;
  CLI::App* scale = app.add_subcommand(
      "scale", "Runtime/memory scaling over the size grid");
  scale->add_option("--input", scale_opt.input, "edge-list CSV")->required();
  scale->add_option("--parts", scale_opt.parts, "grid divisions");
  scale->add_option("--repeats", scale_opt.repeats, "timed runs per size");
  scale->add_option("--kappa", scale_opt.kappa, "risk-attitude weight");
  scale->add_option("--out", scale_opt.out, "scaling CSV path");

  ProfileOpts prof_opt;
  CLI::App* profile = app.add_subcommand(
      "profile", "Deterministic alpha-cut cost profile of the ranked path");
  profile->add_option("--input", prof_opt.common.input, "edge-list CSV")
      ->required();
  profile->add_option("--source", prof_opt.common.source, "source node label")
      ->required();
  profile->add_option("--target", prof_opt.common.target, "target node label")
      ->required();
  profile->add_option("--kappa", prof_opt.common.kappa, "risk-attitude weight");
  profile
      ->add_option("--levels", prof_opt.levels,
                   "comma-separated alpha levels (default 0.05..0.95)")
      ->delimiter(',');
  profile->add_option("--mode", prof_opt.mode, "lower|upper|midpoint");
  profile->add_option("--out", prof_opt.common.out, "profile CSV path");

  GenerateOpts gen_opt;
  CLI::App* generate = app.add_subcommand(
      "generate", "Generate a synthetic GGFN instance");
  generate->add_option("--nodes", gen_opt.nodes, "node count")->required();
  generate->add_option("--edges", gen_opt.edges, "edge count")->required();
  generate->add_option("--regime", gen_opt.regime,
                       "height regime: high|moderate|low|mixed");
  generate->add_option("--eps", gen_opt.eps, "mixed-regime flip fraction");
  generate->add_option("--sigma-factor", gen_opt.sigma_factor,
                       "dispersion scale: sigma = factor * c * U(0,1)");
  generate->add_option("--core-min", gen_opt.core_min, "core range lower end");
  generate->add_option("--core-max", gen_opt.core_max, "core range upper end");
  generate->add_option("--seed", gen_opt.seed, "PRNG seed");
  generate->add_option("--out", gen_opt.out, "edge-list CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(solve_opt);
    }
    if (simulate->parsed()) {
      return cmd_simulate(sim_opt);
    }
    if (scale->parsed()) {
      return cmd_scale(scale_opt);
    }
    if (profile->parsed()) {
      return cmd_profile(prof_opt);
    }
    if (generate->parsed()) {
      return cmd_generate(gen_opt);
    }
    std::cerr << "no subcommand given\n";
    return 1;
  } catch (const ggfnsp::Unreachable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ggfnsp::RejectionExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
