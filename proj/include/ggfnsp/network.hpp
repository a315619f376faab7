#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ggfnsp/ggfn.hpp"
#include "ggfnsp/rng.hpp"

namespace ggfnsp {

/** Dense node index in [0, n_nodes). */
using NodeId = std::uint32_t;

/** Directed edge carrying a GGFN cost. */
struct Edge {
  NodeId src;
  NodeId dst;
  Ggfn cost;
};

/**
 * Immutable directed network: labelled nodes, an edge list, and a CSR
 * adjacency index over it. Construction validates that endpoints are in
 * range, labels are unique and CSV-safe, edge cores are positive, and that
 * there are no self-loops or duplicate (src, dst) pairs; a constructed
 * Network is therefore always consistent and safe for concurrent readers.
 *
 * Node ids are assigned in first-appearance order of their labels and edge
 * indices follow construction order; both orders are load-bearing (sampling
 * consumes edges in ascending index order).
 */
class Network {
 public:
  Network() = default;
  Network(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t n_nodes() const { return labels_.size(); }
  std::size_t n_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId v) const { return labels_[v]; }

  /** Node id for a label, or nullopt if absent. */
  std::optional<NodeId> find_node(std::string_view label) const;

  /** Indices into edges() of v's out-edges, ascending. */
  std::span<const std::uint32_t> out_edges(NodeId v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adj_offsets_;  // CSR: n_nodes + 1 entries
  std::vector<std::uint32_t> adj_edges_;    // edge indices grouped by src
};

/**
 * Parses edge-list CSV with the required header
 *   source,target,core_c,sigma,height_h
 * Blank lines and lines starting with '#' are ignored (runs embed their
 * manifest as '#' comments). Fields are trimmed of surrounding whitespace.
 * Throws ParseError (with line and column) for structural problems and
 * ValidationError for well-formed rows carrying invalid values
 * (h outside (0,1], sigma < 0, c <= 0, self-loops, duplicate edges).
 */
Network parse_edge_list(std::istream& in);
Network parse_edge_list(std::string_view text);

/**
 * Writes the edge-list CSV (same dialect as parse_edge_list) with numbers at
 * shortest round-trip precision, so parse(write(net)) reconstructs the
 * network bit-identically. `preamble` lines, if any, are emitted first,
 * each prefixed with "# ".
 */
void write_edge_list(const Network& net, std::ostream& out,
                     std::span<const std::string> preamble = {});
std::string write_edge_list(const Network& net,
                            std::span<const std::string> preamble = {});

/**
 * Subgraph induced on nodes {0, ..., k-1}: keeps exactly the edges with both
 * endpoints < k; node ids and labels are unchanged. Requires 1 <= k <=
 * n_nodes (DomainError otherwise).
 */
Network induced_subgraph(const Network& net, std::size_t k);

/**
 * Highest-index node reachable from src via directed edges (src itself when
 * isolated). Plain depth-first search.
 */
NodeId max_reachable(const Network& net, NodeId src);

/**
 * Edge-height sampling regime: a Beta family for the height draws.
 *   High      Beta(8, 2)   mean 0.8
 *   Moderate  Beta(4, 3)   mean 4/7
 *   Low       Beta(2, 5)   mean 2/7
 *   Mixed     Beta(8, 2), redrawn from Beta(2, 5) with probability eps
 */
struct HeightRegime {
  enum class Kind { High, Moderate, Low, Mixed };

  Kind kind = Kind::High;
  double a = 8.0;
  double b = 2.0;
  double eps = 0.0;  // mixing fraction, Mixed only

  std::string name() const;

  static HeightRegime high();
  static HeightRegime moderate();
  static HeightRegime low();
  static HeightRegime mixed(double eps = 0.2);
  /** Accepts "high" / "moderate" / "low" / "mixed" (DomainError otherwise). */
  static HeightRegime from_name(std::string_view name, double eps = 0.2);
};

/**
 * One height draw from the regime. Draws of exactly 0 or 1 are nudged by
 * machine epsilon into (0, 1) so the value is always a valid subnormal
 * height. For Mixed the Beta(8,2) draw is always consumed first, then one
 * uniform decides whether to redraw from Beta(2,5).
 */
double draw_height(const HeightRegime& regime, Rng& rng);

/**
 * Copy of net with every edge height redrawn from the regime, in ascending
 * edge-index order. Cores, dispersions, topology and labels are unchanged.
 */
Network apply_regime_heights(const Network& net, const HeightRegime& regime,
                             Rng& rng);

/** Parameters for synthetic instance generation. */
struct GenParams {
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;
  HeightRegime regime = HeightRegime::high();
  double sigma_factor = 0.4;       // sigma = sigma_factor * c * U(0,1)
  Interval core_range{5.0, 50.0};  // cores uniform on this range
  std::uint64_t seed = 42;
};

/**
 * Deterministic synthetic GGFN instance with nodes "n0".."n{N-1}". Topology:
 * every node j >= 1 first receives one backbone in-edge from a uniformly
 * chosen lower-index node (so the whole graph is reachable from n0), then
 * uniformly random distinct non-self edges are added until exactly n_edges
 * exist. Cores are uniform on core_range, sigma = sigma_factor * c * U(0,1)
 * (so sigma lies in [0, sigma_factor * c]), heights i.i.d. from the regime.
 * Topology, cost and height draws use three independent sub-streams of the
 * seed, so the topology for a given (n_nodes, n_edges, seed) is identical
 * across regimes. Requires n_nodes >= 1, n_nodes - 1 <= n_edges <=
 * n(n-1)/4 (rejection-based edge placement), sigma_factor > 0 and
 * 0 < core_range.lo <= core_range.hi (DomainError otherwise).
 */
Network generate_instance(const GenParams& params);

}  // namespace ggfnsp
