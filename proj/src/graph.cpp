#include "burnlab/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "burnlab/errors.hpp"

namespace burnlab {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n_(n), adj_(static_cast<size_t>(std::max(n, 0))), labels_(std::move(labels)) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (n > kMaxVertices)
    throw LimitError("graph exceeds the supported maximum of 64 vertices");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("label list must cover every vertex");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

bool Graph::is_connected() const {
  Bits seen = bit(0);
  Bits frontier = seen;
  while (frontier) {
    Bits next = 0;
    for (Bits m = frontier; m; m &= m - 1) next |= adj_[lowest_bit(m)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == full_mask();
}

std::string Graph::vertex_name(int v) const {
  if (!labels_.empty()) return labels_[v];
  return std::to_string(v);
}

Graph Graph::from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> payload;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) payload.push_back(line);
  }
  if (payload.empty()) throw std::invalid_argument("edge list is empty");

  auto parse_ints = [](const std::string& s, int want) {
    std::istringstream ls(s);
    std::vector<long> vals;
    long x;
    while (ls >> x) vals.push_back(x);
    if (!ls.eof()) throw std::invalid_argument("malformed edge list line: " + s);
    if (static_cast<int>(vals.size()) != want)
      throw std::invalid_argument("malformed edge list line: " + s);
    return vals;
  };

  auto header = parse_ints(payload[0], 2);
  long n = header[0], m = header[1];
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (n > kMaxVertices)
    throw LimitError("edge list exceeds the supported maximum of 64 vertices");
  if (m < 0 || m != static_cast<long>(payload.size()) - 1)
    throw std::invalid_argument("edge count does not match the listed edges");

  std::vector<std::pair<int, int>> edges;
  for (size_t i = 1; i < payload.size(); ++i) {
    auto uv = parse_ints(payload[i], 2);
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
      throw std::invalid_argument("vertex index out of range: " + payload[i]);
    edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string Graph::to_edge_list() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n_; ++u)
    for (Bits m = adj_[u] & ~mask_below(u + 1); m; m &= m - 1)
      edges.emplace_back(u, lowest_bit(m));
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << n_ << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

StructuralStats structural_stats(const Graph& g) {
  StructuralStats st;
  int n = g.vertex_count();
  Bits deg2 = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == 1) st.leaves++;
    if (d == 2) deg2 |= bit(v);
  }
  // Components of the degree-2 induced subgraph are paths or cycles, since
  // inside it every vertex keeps at most two neighbours.
  Bits todo = deg2;
  while (todo) {
    int start = lowest_bit(todo);
    Bits comp = bit(start);
    Bits frontier = comp;
    while (frontier) {
      Bits next = 0;
      for (Bits m = frontier; m; m &= m - 1)
        next |= g.neighbors(lowest_bit(m)) & deg2;
      frontier = next & ~comp;
      comp |= frontier;
    }
    todo &= ~comp;
    int c = popcount(comp);
    bool cycle = true;
    for (Bits m = comp; m; m &= m - 1)
      if (popcount(g.neighbors(lowest_bit(m)) & comp) != 2) cycle = false;
    st.deg2_chain_cover += cycle ? (c + 1) / 2 : c / 2;
  }
  return st;
}

namespace {

struct DomSearch {
  const Graph& g;
  Bits full;
  std::vector<Bits> closed;   // N[v]
  std::vector<Bits> suffix;   // union of N[u] for u >= v
  std::vector<int> chosen;
  std::vector<int> best;

  bool extend(int start, int left, Bits covered) {
    if (left == 0) {
      if (covered == full) {
        best = chosen;
        return true;
      }
      return false;
    }
    int n = g.vertex_count();
    for (int v = start; v + left <= n; ++v) {
      // Even taking every remaining candidate cannot finish: cut the branch.
      if ((covered | suffix[v]) != full) return false;
      chosen.push_back(v);
      if (extend(v + 1, left - 1, covered | closed[v])) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<int> min_dominating_set(const Graph& g, int exact_limit) {
  int n = g.vertex_count();
  if (n > exact_limit)
    throw LimitError("dominating set search limited to " +
                     std::to_string(exact_limit) + " vertices");
  if (!g.is_connected())
    throw std::invalid_argument("dominating set search expects a connected graph");

  DomSearch s{g, g.full_mask(), {}, {}, {}, {}};
  s.closed.resize(n);
  for (int v = 0; v < n; ++v) s.closed[v] = g.neighbors(v) | bit(v);
  s.suffix.assign(n + 1, 0);
  for (int v = n - 1; v >= 0; --v) s.suffix[v] = s.suffix[v + 1] | s.closed[v];

  for (int k = 1; k <= n; ++k) {
    if (s.extend(0, k, 0)) return s.best;
  }
  return {};  // unreachable for n >= 1
}

}  // namespace burnlab
