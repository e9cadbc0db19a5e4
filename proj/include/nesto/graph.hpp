#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nesto {

// Subsets of a ground set of at most 32 labels.
using Mask = std::uint32_t;

inline constexpr int kMaxLabels = 32;

// Simple undirected graph on nodes 0..n-1.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  // Throws PreconditionError on self-loops or out-of-range endpoints.
  // Duplicate edges (in either orientation) are merged.
  Graph(int n, const std::vector<Edge>& edges);

  static Graph complete(int n);
  static Graph empty(int n);
  // Node 0 joined to n leaves 1..n.
  static Graph star(int n);
  static Graph path(int n);
  // Nodes 0..m-1 on one side, m..m+n-1 on the other.
  static Graph bipartite(int m, int n);
  // Disjoint union (a's nodes first) plus every edge between the parts.
  static Graph join(const Graph& a, const Graph& b);

  int node_count() const { return n_; }
  // Sorted (u < v) edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  Mask neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return (adjacency_[static_cast<std::size_t>(u)] >> v) & 1U; }

  // Whether the subgraph induced on `nodes` is connected (false for empty).
  bool induces_connected(Mask nodes) const;
  bool is_connected() const;
  Mask all_nodes() const { return n_ == 0 ? 0 : (n_ >= 32 ? ~Mask{0} : (Mask{1} << n_) - 1); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Mask> adjacency_;
};

// Parses the graph mini-language:
//   complete:N  empty:N  star:N  path:N  bipartite:M,N
//   join(SPEC,SPEC)  edges:N:0-1,1-2,...
// Edge endpoints are 0-based. Throws std::invalid_argument on bad input.
Graph parse_graph_spec(std::string_view spec);

// Subgraph induced on `nodes`, relabelled 0..k-1 in increasing label order.
Graph induced_subgraph(const Graph& g, Mask nodes);

// Graph on the nodes outside `removed`, relabelled 0..k-1 in label order,
// with i ~ j whenever i and j are joined by a path inside removed + {i, j}.
Graph contracted_complement(const Graph& g, Mask removed);

// Every graph on n labelled nodes that is connected, in increasing order of
// edge bitmask.
std::vector<Graph> connected_graphs(int n);

// One representative per isomorphism class of connected graphs on n nodes
// (n <= 6), each the edge-bitmask-minimal member of its class.
std::vector<Graph> connected_graph_classes(int n);

}  // namespace nesto
