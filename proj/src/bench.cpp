#include "ggfnsp/bench.hpp"

#include <algorithm>
#include <cfloat>
#include <chrono>
#include <cmath>

#include "ggfnsp/alloc_probe.hpp"

namespace ggfnsp {
namespace {

double median_of(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) {
    return values[n / 2];
  }
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::vector<ScalingRow> run_scaling(const Network& net, std::size_t parts,
                                    std::size_t repeats,
                                    const RiskParams& rp) {
  if (parts < 1) {
    throw DomainError("run_scaling: parts must be >= 1");
  }
  if (repeats < 1) {
    throw DomainError("run_scaling: repeats must be >= 1");
  }
  if (net.n_nodes() < 1) {
    throw DomainError("run_scaling: network has no nodes");
  }

  const std::size_t n = net.n_nodes();
  std::vector<ScalingRow> rows;
  rows.reserve(parts);
  for (std::size_t i = 1; i <= parts; ++i) {
    // k_i = ceil(i * N / parts) in exact integer arithmetic.
    const std::size_t k = (i * n + parts - 1) / parts;

    ScalingRow row;
    const Network sub = induced_subgraph(net, k);
    row.n_nodes = sub.n_nodes();
    row.m_edges = sub.n_edges();
    const NodeId src = 0;
    const NodeId dst = max_reachable(sub, src);
    row.t_dst = dst;
    if (dst == src) {
      row.skipped = true;  // src isolated: nothing to solve
      rows.push_back(row);
      continue;
    }

    std::vector<double> times;
    times.reserve(repeats);
    for (std::size_t r = 0; r < repeats; ++r) {
      memprobe::reset();
      const auto start = std::chrono::steady_clock::now();
      const RankedResult res = dijkstra_ranked(sub, src, dst, rp);
      const auto stop = std::chrono::steady_clock::now();
      row.peak_mem_bytes = std::max(row.peak_mem_bytes, memprobe::peak_delta());
      times.push_back(std::chrono::duration<double>(stop - start).count());
      (void)res;
    }
    row.t_median_s = median_of(times);
    rows.push_back(row);
  }
  return rows;
}

AlphaProfile alpha_profile(const Network& net, const Path& p,
                           std::span<const double> levels, EndpointMode mode) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] > 0.0) || !(levels[i] < 1.0)) {
      throw DomainError("alpha levels must lie in (0, 1)");
    }
    if (i > 0 && !(levels[i] > levels[i - 1])) {
      throw DomainError("alpha levels must be strictly increasing");
    }
  }
  const PathLabel label = path_aggregate(net, p);
  const Ggfn agg(label.c_p, label.sigma_p, label.h_p);
  const double alpha_cap = label.h_p * (1.0 - DBL_EPSILON);

  AlphaProfile profile;
  profile.levels.assign(levels.begin(), levels.end());
  profile.mode = mode;
  profile.costs.reserve(levels.size());
  for (double alpha : levels) {
    if (mode == EndpointMode::midpoint) {
      profile.costs.push_back(label.c_p);  // symmetric cut: midpoint is c_P
      continue;
    }
    const Interval cut = alpha_cut(agg, std::min(alpha, alpha_cap));
    profile.costs.push_back(mode == EndpointMode::lower ? cut.lo : cut.hi);
  }
  return profile;
}

}  // namespace ggfnsp
