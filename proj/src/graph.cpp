#include "nesto/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nesto/errors.hpp"

namespace nesto {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adjacency_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxLabels) throw PreconditionError("graph node count out of range: " + std::to_string(n));
  std::set<Edge> unique;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for " +
                              std::to_string(n) + " nodes");
    if (u == v) throw PreconditionError("self-loop at node " + std::to_string(u));
    unique.emplace(std::min(u, v), std::max(u, v));
  }
  edges_.assign(unique.begin(), unique.end());
  for (auto [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adjacency_[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph Graph::empty(int n) { return Graph(n, {}); }

Graph Graph::star(int n) { return join(complete(1), empty(n)); }

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph Graph::bipartite(int m, int n) { return join(empty(m), empty(n)); }

Graph Graph::join(const Graph& a, const Graph& b) {
  const int offset = a.node_count();
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  for (int u = 0; u < a.node_count(); ++u)
    for (int v = 0; v < b.node_count(); ++v) edges.emplace_back(u, v + offset);
  return Graph(a.node_count() + b.node_count(), edges);
}

bool Graph::induces_connected(Mask nodes) const {
  if (nodes == 0) return false;
  Mask seen = nodes & (~nodes + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adjacency_[static_cast<std::size_t>(std::countr_zero(f))];
    next &= nodes & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == nodes;
}

bool Graph::is_connected() const { return induces_connected(all_nodes()); }

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = parse_graph();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("graph spec '" + std::string(text_) + "': " + why + " at offset " +
                                std::to_string(pos_));
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  int number() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || value < 0) fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  Graph parse_graph() {
    if (consume("join(")) {
      Graph a = parse_graph();
      expect(",");
      Graph b = parse_graph();
      expect(")");
      if (a.node_count() + b.node_count() > kMaxLabels) fail("graph too large");
      return Graph::join(a, b);
    }
    if (consume("complete:")) return sized(Graph::complete);
    if (consume("empty:")) return sized(Graph::empty);
    if (consume("star:")) {
      int n = number();
      if (n + 1 > kMaxLabels) fail("graph too large");
      return Graph::star(n);
    }
    if (consume("path:")) return sized(Graph::path);
    if (consume("bipartite:")) {
      int m = number();
      expect(",");
      int n = number();
      if (m + n > kMaxLabels) fail("graph too large");
      return Graph::bipartite(m, n);
    }
    if (consume("edges:")) {
      int n = number();
      if (n > kMaxLabels) fail("graph too large");
      std::vector<Graph::Edge> edges;
      if (consume(":")) {
        do {
          int u = number();
          expect("-");
          int v = number();
          edges.emplace_back(u, v);
        } while (consume(","));
      }
      try {
        return Graph(n, edges);
      } catch (const PreconditionError& e) {
        fail(e.what());
      }
    }
    fail("unknown graph kind");
  }

  Graph sized(Graph (*make)(int)) {
    int n = number();
    if (n > kMaxLabels) fail("graph too large");
    return make(n);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Positions of the set bits of `nodes`, ascending.
std::vector<int> labels_of(Mask nodes) {
  std::vector<int> out;
  for (; nodes != 0; nodes &= nodes - 1) out.push_back(std::countr_zero(nodes));
  return out;
}

}  // namespace

Graph parse_graph_spec(std::string_view spec) { return SpecParser(spec).parse(); }

Graph induced_subgraph(const Graph& g, Mask nodes) {
  auto labels = labels_of(nodes);
  std::vector<Graph::Edge> edges;
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (g.has_edge(labels[a], labels[b])) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Graph(static_cast<int>(labels.size()), edges);
}

Graph contracted_complement(const Graph& g, Mask removed) {
  auto labels = labels_of(g.all_nodes() & ~removed);
  std::vector<Graph::Edge> edges;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      Mask through = removed | (Mask{1} << labels[a]) | (Mask{1} << labels[b]);
      // i and j are path connected in the induced graph iff they lie in the
      // same component; restrict to that component via a reachability sweep.
      Mask seen = Mask{1} << labels[a];
      Mask frontier = seen;
      while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
        next &= through & ~seen;
        seen |= next;
        frontier = next;
      }
      if ((seen >> labels[b]) & 1U) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return Graph(static_cast<int>(labels.size()), edges);
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 0 || n > 7) throw PreconditionError("connected_graphs supports 0..7 nodes");
  std::vector<Graph::Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<Graph::Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((bits >> s) & 1U) edges.push_back(slots[s]);
    Graph g(n, edges);
    if (n > 0 && g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> connected_graph_classes(int n) {
  if (n < 0 || n > 6) throw PreconditionError("connected_graph_classes supports 0..6 nodes");
  std::vector<Graph::Edge> slots;
  std::vector<std::vector<int>> slot_index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      slot_index[u][v] = slot_index[v][u] = static_cast<int>(slots.size());
      slots.emplace_back(u, v);
    }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    std::uint32_t best = bits;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((bits >> s) & 1U) image |= std::uint32_t{1} << slot_index[p[slots[s].first]][p[slots[s].second]];
      best = std::min(best, image);
      if (best < bits) break;
    }
    if (best != bits || !seen.insert(bits).second) continue;
    std::vector<Graph::Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((bits >> s) & 1U) edges.push_back(slots[s]);
    Graph g(n, edges);
    if (n > 0 && g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace nesto
