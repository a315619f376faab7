#include "ggfnsp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>

#include "ggfnsp/kernels.hpp"

namespace ggfnsp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_node(const Network& net, NodeId v, const char* role) {
  if (v >= net.n_nodes()) {
    throw DomainError(std::string(role) + " node index " + std::to_string(v) +
                      " out of range [0, " + std::to_string(net.n_nodes()) +
                      ")");
  }
}

// Nodes of the tentative path ending at v, read off the parent chain.
std::vector<NodeId> chain_nodes(const std::vector<NodeId>& parent_node,
                                NodeId s, NodeId v) {
  std::vector<NodeId> nodes;
  for (NodeId u = v;; u = parent_node[u]) {
    nodes.push_back(u);
    if (u == s) {
      break;
    }
  }
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace

SolveResult dijkstra_crisp(const Network& net, std::span<const double> weights,
                           NodeId s, NodeId t) {
  require_node(net, s, "source");
  require_node(net, t, "target");
  if (weights.size() != net.n_edges()) {
    throw DomainError("weight vector has " + std::to_string(weights.size()) +
                      " entries for " + std::to_string(net.n_edges()) +
                      " edges");
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("edge weights must be finite and >= 0");
    }
  }

  const std::size_t n = net.n_nodes();
  std::vector<double> dist(n, kInf);
  std::vector<NodeId> parent_node(n, 0);
  std::vector<std::uint32_t> parent_edge(n, 0);
  std::vector<bool> settled(n, false);

  // Lazy-deletion binary heap; pops ascending (dist, node), so equal-distance
  // nodes settle in index order.
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[s] = 0.0;
  heap.emplace(0.0, s);

  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (settled[v]) {
      continue;
    }
    settled[v] = true;
    if (v == t) {
      break;
    }
    for (std::uint32_t ei : net.out_edges(v)) {
      const Edge& e = net.edge(ei);
      const NodeId w = e.dst;
      if (settled[w]) {
        continue;
      }
      const double nd = dist[v] + weights[ei];
      if (nd < dist[w]) {
        dist[w] = nd;
        parent_node[w] = v;
        parent_edge[w] = ei;
        heap.emplace(nd, w);
      } else if (nd == dist[w]) {
        // Cost tie: keep the lexicographically smaller node sequence. With
        // strictly positive weights every tie candidate arrives before w
        // settles (its predecessor has strictly smaller distance), so the
        // settled path is the global lexicographic minimum.
        const std::vector<NodeId> cand = chain_nodes(parent_node, s, v);
        std::vector<NodeId> cur = chain_nodes(parent_node, s, parent_node[w]);
        if (std::lexicographical_compare(cand.begin(), cand.end(),
                                         cur.begin(), cur.end())) {
          parent_node[w] = v;
          parent_edge[w] = ei;
        }
      }
    }
  }

  if (!settled[t]) {
    throw Unreachable("no directed path from '" + net.label(s) + "' to '" +
                      net.label(t) + "'");
  }

  SolveResult result;
  result.cost = dist[t];
  result.path.nodes = chain_nodes(parent_node, s, t);
  result.path.edges.reserve(result.path.nodes.size() - 1);
  for (NodeId u = t; u != s; u = parent_node[u]) {
    result.path.edges.push_back(parent_edge[u]);
  }
  std::reverse(result.path.edges.begin(), result.path.edges.end());
  return result;
}

std::vector<double> ranked_edge_weights(const Network& net,
                                        const RiskParams& rp) {
  detail::require_kappa(rp);
  const std::size_t m = net.n_edges();
  std::vector<double> c(m);
  std::vector<double> sigma(m);
  std::vector<double> h(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Ggfn& g = net.edge(i).cost;
    c[i] = g.c;
    sigma[i] = g.sigma;
    h[i] = g.h;
  }
  std::vector<double> out(m);
  kernels::active().ranked_weights(m, c.data(), sigma.data(), h.data(),
                                   rp.kappa, out.data());
  return out;
}

std::vector<double> core_edge_weights(const Network& net) {
  std::vector<double> out(net.n_edges());
  for (std::size_t i = 0; i < net.n_edges(); ++i) {
    out[i] = net.edge(i).cost.c;
  }
  return out;
}

double path_weight_sum(const Path& p, std::span<const double> weights) {
  double sum = 0.0;
  for (std::uint32_t ei : p.edges) {
    sum += weights[ei];
  }
  return sum;
}

PathLabel path_aggregate(const Network& net, const Path& p,
                         const RiskParams& rp) {
  detail::require_kappa(rp);
  if (p.nodes.empty() || p.nodes.size() != p.edges.size() + 1) {
    throw InvalidPath("path must list k+1 nodes for k edges");
  }
  std::vector<bool> seen(net.n_nodes(), false);
  for (NodeId v : p.nodes) {
    if (v >= net.n_nodes()) {
      throw InvalidPath("path node index out of range");
    }
    if (seen[v]) {
      throw InvalidPath("path repeats node '" + net.label(v) + "'");
    }
    seen[v] = true;
  }
  std::vector<Ggfn> costs;
  costs.reserve(p.edges.size());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] >= net.n_edges()) {
      throw InvalidPath("path edge index out of range");
    }
    const Edge& e = net.edge(p.edges[i]);
    if (e.src != p.nodes[i] || e.dst != p.nodes[i + 1]) {
      throw InvalidPath("path edge " + std::to_string(i) +
                        " does not connect its listed endpoints");
    }
    costs.push_back(e.cost);
  }
  const Ggfn agg = costs.empty() ? Ggfn(0.0, 0.0, 1.0)
                                 : fold_sum(std::span<const Ggfn>(costs));
  return PathLabel{agg.c, agg.sigma, agg.h, r_cost(agg, rp)};
}

RankedResult dijkstra_ranked(const Network& net, NodeId s, NodeId t,
                             const RiskParams& rp) {
  const std::vector<double> weights = ranked_edge_weights(net, rp);
  SolveResult crisp = dijkstra_crisp(net, weights, s, t);
  RankedResult result;
  result.objective = crisp.cost;
  result.label = path_aggregate(net, crisp.path, rp);
  result.path = std::move(crisp.path);
  return result;
}

namespace {

// Exhaustive DFS over simple s-t paths with left-to-right prefix sums, so a
// complete path's cost is bit-identical to the Dijkstra accumulation of the
// same node sequence.
class Enumerator {
 public:
  Enumerator(const Network& net, std::span<const double> weights, NodeId s,
             NodeId t)
      : net_(net),
        weights_(weights),
        t_(t),
        guarded_(net.n_nodes() > 12),
        on_path_(net.n_nodes(), false) {
    prefix_.reserve(net.n_nodes() + 1);
    prefix_.push_back(0.0);
    nodes_.push_back(s);
    on_path_[s] = true;
  }

  SolveResult run() {
    visit();
    if (!found_) {
      throw Unreachable("no directed path from '" + net_.label(nodes_[0]) +
                        "' to '" + net_.label(t_) + "'");
    }
    return std::move(best_);
  }

 private:
  static constexpr std::uint64_t kMaxPaths = 100000;
  static constexpr std::uint64_t kMaxSteps = 10000000;

  void visit() {
    if (guarded_ && ++steps_ > kMaxSteps) {
      throw TooLarge("enumerate_best: exceeded " +
                     std::to_string(kMaxSteps) + " DFS steps");
    }
    const NodeId v = nodes_.back();
    if (v == t_) {
      if (guarded_ && ++paths_ > kMaxPaths) {
        throw TooLarge("enumerate_best: more than " +
                       std::to_string(kMaxPaths) + " simple paths");
      }
      consider();
      return;
    }
    for (std::uint32_t ei : net_.out_edges(v)) {
      const NodeId w = net_.edge(ei).dst;
      if (on_path_[w]) {
        continue;
      }
      nodes_.push_back(w);
      edges_.push_back(ei);
      prefix_.push_back(prefix_[prefix_.size() - 1] + weights_[ei]);
      on_path_[w] = true;
      visit();
      on_path_[w] = false;
      prefix_.pop_back();
      edges_.pop_back();
      nodes_.pop_back();
    }
  }

  void consider() {
    const double cost = prefix_.back();
    const bool better =
        !found_ || cost < best_.cost ||
        (cost == best_.cost &&
         std::lexicographical_compare(nodes_.begin(), nodes_.end(),
                                      best_.path.nodes.begin(),
                                      best_.path.nodes.end()));
    if (better) {
      found_ = true;
      best_.cost = cost;
      best_.path.nodes = nodes_;
      best_.path.edges = edges_;
    }
  }

  const Network& net_;
  std::span<const double> weights_;
  NodeId t_;
  bool guarded_;
  std::uint64_t steps_ = 0;
  std::uint64_t paths_ = 0;
  std::vector<NodeId> nodes_;
  std::vector<std::uint32_t> edges_;
  std::vector<double> prefix_;
  std::vector<bool> on_path_;
  bool found_ = false;
  SolveResult best_;
};

}  // namespace

SolveResult enumerate_best(const Network& net, NodeId s, NodeId t,
                           Objective objective, const RiskParams& rp) {
  require_node(net, s, "source");
  require_node(net, t, "target");
  const std::vector<double> weights = objective == Objective::core
                                          ? core_edge_weights(net)
                                          : ranked_edge_weights(net, rp);
  return Enumerator(net, weights, s, t).run();
}

}  // namespace ggfnsp
