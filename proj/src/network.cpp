#include "ggfnsp/network.hpp"

#include <algorithm>
#include <cfloat>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace ggfnsp {
namespace {

constexpr std::string_view kHeader = "source,target,core_c,sigma,height_h";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Label rules that guarantee the CSV round-trip: non-empty, no separator or
// comment characters, no surrounding whitespace (the parser trims fields).
void require_csv_safe_label(const std::string& label) {
  if (label.empty()) {
    throw ValidationError("node label must be non-empty");
  }
  if (label.find_first_of(",#\n") != std::string::npos) {
    throw ValidationError("node label '" + label +
                          "' contains a CSV separator or comment character");
  }
  if (trim(label) != label) {
    throw ValidationError("node label '" + label +
                          "' has leading or trailing whitespace");
  }
}

std::uint64_t edge_key(NodeId src, NodeId dst) {
  return (static_cast<std::uint64_t>(src) << 32) | dst;
}

// Uniform index in [0, bound). u01() * bound can round up to bound for large
// bounds, hence the clamp.
std::size_t uniform_index(Rng& rng, std::size_t bound) {
  auto idx = static_cast<std::size_t>(rng.u01() * static_cast<double>(bound));
  return idx >= bound ? bound - 1 : idx;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

struct Splitter {
  std::string_view line;
  std::size_t pos = 0;
  bool done = false;

  // Returns the next comma-separated field (trimmed) and its 1-based column.
  std::optional<std::pair<std::string_view, std::size_t>> next() {
    if (done) {
      return std::nullopt;
    }
    const std::size_t start = pos;
    const std::size_t comma = line.find(',', pos);
    std::string_view raw;
    if (comma == std::string_view::npos) {
      raw = line.substr(start);
      done = true;
    } else {
      raw = line.substr(start, comma - start);
      pos = comma + 1;
    }
    return std::make_pair(trim(raw), start + 1);
  }
};

double parse_real(std::string_view field, std::size_t line_no,
                  std::size_t column, const char* what) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError(line_no, column,
                     std::string(what) + " '" + std::string(field) +
                         "' is not a real number");
  }
  return value;
}

}  // namespace

Network::Network(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  std::unordered_set<std::string_view> seen_labels;
  seen_labels.reserve(labels_.size());
  for (const std::string& label : labels_) {
    require_csv_safe_label(label);
    if (!seen_labels.insert(label).second) {
      throw ValidationError("duplicate node label '" + label + "'");
    }
  }
  std::unordered_set<std::uint64_t> seen_edges;
  seen_edges.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.src >= labels_.size() || e.dst >= labels_.size()) {
      throw ValidationError("edge endpoint index out of range");
    }
    if (e.src == e.dst) {
      throw ValidationError("self-loop at node '" + labels_[e.src] + "'");
    }
    if (!(e.cost.c > 0.0)) {
      throw ValidationError("edge '" + labels_[e.src] + "' -> '" +
                            labels_[e.dst] + "' has non-positive core " +
                            format_double(e.cost.c));
    }
    if (!seen_edges.insert(edge_key(e.src, e.dst)).second) {
      throw ValidationError("duplicate edge '" + labels_[e.src] + "' -> '" +
                            labels_[e.dst] + "'");
    }
  }
  adj_offsets_.assign(labels_.size() + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_offsets_[e.src + 1];
  }
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    adj_offsets_[v + 1] += adj_offsets_[v];
  }
  adj_edges_.resize(edges_.size());
  std::vector<std::uint32_t> cursor(adj_offsets_.begin(),
                                    adj_offsets_.end() - 1);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    adj_edges_[cursor[edges_[i].src]++] = i;
  }
}

std::optional<NodeId> Network::find_node(std::string_view label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) {
      return static_cast<NodeId>(v);
    }
  }
  return std::nullopt;
}

std::span<const std::uint32_t> Network::out_edges(NodeId v) const {
  return {adj_edges_.data() + adj_offsets_[v],
          adj_offsets_[v + 1] - adj_offsets_[v]};
}

Network parse_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> label_ids;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen_edges;

  const auto intern = [&](std::string_view label) -> NodeId {
    if (auto it = label_ids.find(std::string(label)); it != label_ids.end()) {
      return it->second;
    }
    const NodeId id = static_cast<NodeId>(labels.size());
    labels.emplace_back(label);
    label_ids.emplace(labels.back(), id);
    return id;
  };

  bool header_seen = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    if (!header_seen) {
      // Header must match field-for-field after trimming.
      Splitter split{raw};
      std::size_t field_idx = 0;
      Splitter expected{kHeader};
      bool ok = true;
      while (true) {
        auto got = split.next();
        auto want = expected.next();
        if (!got && !want) {
          break;
        }
        if (!got || !want || got->first != want->first) {
          ok = false;
          break;
        }
        ++field_idx;
      }
      if (!ok) {
        throw ParseError(line_no, 1,
                         "expected header '" + std::string(kHeader) + "'");
      }
      header_seen = true;
      continue;
    }

    Splitter split{raw};
    std::string_view fields[5];
    std::size_t columns[5];
    for (std::size_t i = 0; i < 5; ++i) {
      auto field = split.next();
      if (!field) {
        throw ParseError(line_no, raw.size() + 1,
                         "expected 5 fields, found " + std::to_string(i));
      }
      fields[i] = field->first;
      columns[i] = field->second;
    }
    if (auto extra = split.next()) {
      throw ParseError(line_no, extra->second,
                       "expected 5 fields, found more");
    }
    if (fields[0].empty()) {
      throw ParseError(line_no, columns[0], "empty source label");
    }
    if (fields[1].empty()) {
      throw ParseError(line_no, columns[1], "empty target label");
    }
    const double c = parse_real(fields[2], line_no, columns[2], "core_c");
    const double sigma = parse_real(fields[3], line_no, columns[3], "sigma");
    const double h = parse_real(fields[4], line_no, columns[4], "height_h");

    const std::string line_tag = "line " + std::to_string(line_no) + ": ";
    if (fields[0] == fields[1]) {
      throw ValidationError(line_tag + "self-loop at node '" +
                            std::string(fields[0]) + "'");
    }
    if (!(c > 0.0)) {
      throw ValidationError(line_tag + "core_c must be positive, got " +
                            std::string(fields[2]));
    }
    const NodeId src = intern(fields[0]);
    const NodeId dst = intern(fields[1]);
    if (!seen_edges.insert(edge_key(src, dst)).second) {
      throw ValidationError(line_tag + "duplicate edge '" +
                            std::string(fields[0]) + "' -> '" +
                            std::string(fields[1]) + "'");
    }
    try {
      edges.push_back(Edge{src, dst, Ggfn(c, sigma, h)});
    } catch (const ValidationError& e) {
      throw ValidationError(line_tag + e.what());
    }
  }
  if (!header_seen) {
    throw ParseError(line_no + 1, 1, "missing header row");
  }
  return Network(std::move(labels), std::move(edges));
}

Network parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(const Network& net, std::ostream& out,
                     std::span<const std::string> preamble) {
  for (const std::string& line : preamble) {
    out << "# " << line << '\n';
  }
  out << kHeader << '\n';
  for (const Edge& e : net.edges()) {
    out << net.label(e.src) << ',' << net.label(e.dst) << ','
        << format_double(e.cost.c) << ',' << format_double(e.cost.sigma)
        << ',' << format_double(e.cost.h) << '\n';
  }
}

std::string write_edge_list(const Network& net,
                            std::span<const std::string> preamble) {
  std::ostringstream out;
  write_edge_list(net, out, preamble);
  return out.str();
}

Network induced_subgraph(const Network& net, std::size_t k) {
  if (k < 1 || k > net.n_nodes()) {
    throw DomainError("induced_subgraph: k = " + std::to_string(k) +
                      " outside [1, " + std::to_string(net.n_nodes()) + "]");
  }
  std::vector<std::string> labels(net.labels().begin(),
                                  net.labels().begin() + k);
  std::vector<Edge> edges;
  for (const Edge& e : net.edges()) {
    if (e.src < k && e.dst < k) {
      edges.push_back(e);
    }
  }
  return Network(std::move(labels), std::move(edges));
}

NodeId max_reachable(const Network& net, NodeId src) {
  std::vector<bool> visited(net.n_nodes(), false);
  std::vector<NodeId> stack{src};
  visited[src] = true;
  NodeId best = src;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    best = std::max(best, v);
    for (std::uint32_t ei : net.out_edges(v)) {
      const NodeId w = net.edge(ei).dst;
      if (!visited[w]) {
        visited[w] = true;
        stack.push_back(w);
      }
    }
  }
  return best;
}

std::string HeightRegime::name() const {
  switch (kind) {
    case Kind::High:
      return "high";
    case Kind::Moderate:
      return "moderate";
    case Kind::Low:
      return "low";
    case Kind::Mixed:
      return "mixed";
  }
  return "unknown";
}

HeightRegime HeightRegime::high() { return {Kind::High, 8.0, 2.0, 0.0}; }
HeightRegime HeightRegime::moderate() { return {Kind::Moderate, 4.0, 3.0, 0.0}; }
HeightRegime HeightRegime::low() { return {Kind::Low, 2.0, 5.0, 0.0}; }

HeightRegime HeightRegime::mixed(double eps) {
  if (!(eps >= 0.0) || eps >= 1.0) {
    throw DomainError("mixed regime requires eps in [0, 1)");
  }
  return {Kind::Mixed, 8.0, 2.0, eps};
}

HeightRegime HeightRegime::from_name(std::string_view name, double eps) {
  if (name == "high") {
    return high();
  }
  if (name == "moderate") {
    return moderate();
  }
  if (name == "low") {
    return low();
  }
  if (name == "mixed") {
    return mixed(eps);
  }
  throw DomainError("unknown height regime '" + std::string(name) +
                    "' (expected high, moderate, low, or mixed)");
}

double draw_height(const HeightRegime& regime, Rng& rng) {
  double h = rng.beta(regime.a, regime.b);
  if (regime.kind == HeightRegime::Kind::Mixed && rng.u01() < regime.eps) {
    h = rng.beta(2.0, 5.0);
  }
  if (h < DBL_EPSILON) {
    h = DBL_EPSILON;
  }
  const double one_minus = std::nextafter(1.0, 0.0);
  if (h > one_minus) {
    h = one_minus;
  }
  return h;
}

Network apply_regime_heights(const Network& net, const HeightRegime& regime,
                             Rng& rng) {
  std::vector<Edge> edges;
  edges.reserve(net.n_edges());
  for (const Edge& e : net.edges()) {
    edges.push_back(
        Edge{e.src, e.dst, Ggfn(e.cost.c, e.cost.sigma, draw_height(regime, rng))});
  }
  return Network(net.labels(), std::move(edges));
}

Network generate_instance(const GenParams& params) {
  const std::size_t n = params.n_nodes;
  const std::size_t m = params.n_edges;
  if (n < 1) {
    throw DomainError("generate_instance: n_nodes must be >= 1");
  }
  if (m + 1 < n) {
    throw DomainError(
        "generate_instance: need n_edges >= n_nodes - 1 for a connected "
        "backbone");
  }
  const double max_density = static_cast<double>(n) *
                             (static_cast<double>(n) - 1.0) / 4.0;
  if (n > 1 && static_cast<double>(m) > max_density) {
    throw DomainError(
        "generate_instance: edge count too dense for rejection-based "
        "placement (limit n*(n-1)/4)");
  }
  if (!(params.sigma_factor > 0.0)) {
    throw DomainError("generate_instance: sigma_factor must be > 0");
  }
  if (!(params.core_range.lo > 0.0) ||
      !(params.core_range.hi >= params.core_range.lo)) {
    throw DomainError(
        "generate_instance: core_range must satisfy 0 < lo <= hi");
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    labels.push_back("n" + std::to_string(v));
  }

  // Topology stream: backbone parents, then uniformly random extra edges.
  Rng topo(mix(params.seed, kTagTopology));
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  for (std::size_t j = 1; j < n; ++j) {
    const auto parent = static_cast<NodeId>(uniform_index(topo, j));
    pairs.emplace_back(parent, static_cast<NodeId>(j));
    seen.insert(edge_key(parent, static_cast<NodeId>(j)));
  }
  std::size_t attempts = 0;
  const std::size_t max_attempts = 1000 + 100 * m;
  while (pairs.size() < m) {
    if (++attempts > max_attempts) {
      throw DomainError(
          "generate_instance: exceeded edge placement attempt budget");
    }
    const auto s = static_cast<NodeId>(uniform_index(topo, n));
    auto d = static_cast<NodeId>(uniform_index(topo, n - 1));
    if (d >= s) {
      ++d;  // skip the diagonal: d uniform over [0, n) \ {s}
    }
    if (!seen.insert(edge_key(s, d)).second) {
      continue;
    }
    pairs.emplace_back(s, d);
  }

  // Cost stream: core then dispersion per edge, ascending edge order.
  Rng costs(mix(params.seed, kTagCosts));
  std::vector<double> core(m);
  std::vector<double> sigma(m);
  for (std::size_t i = 0; i < m; ++i) {
    core[i] = params.core_range.lo +
              (params.core_range.hi - params.core_range.lo) * costs.u01();
    sigma[i] = params.sigma_factor * core[i] * costs.u01();
  }

  // Height stream: i.i.d. regime draws, ascending edge order.
  Rng heights(mix(params.seed, kTagHeights));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back(Edge{pairs[i].first, pairs[i].second,
                         Ggfn(core[i], sigma[i],
                              draw_height(params.regime, heights))});
  }
  return Network(std::move(labels), std::move(edges));
}

}  // namespace ggfnsp
