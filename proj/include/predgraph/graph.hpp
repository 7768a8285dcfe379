#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace predgraph {

using VertexId = int;

struct Edge {
  VertexId u;
  VertexId v;
  double w = 1.0;
};

// Immutable undirected graph with optional per-vertex and per-edge weights.
// No self-loops, no duplicate undirected edges, dense vertex ids in [0, n).
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges,
        std::vector<double> vertex_weights = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  std::span<const int> incident_edges(VertexId v) const;
  int degree(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  double weighted_degree(VertexId v) const;
  double total_edge_weight() const;

  bool has_vertex_weights() const { return !vertex_weights_.empty(); }
  double vertex_weight(VertexId v) const;
  const std::vector<double>& vertex_weights() const { return vertex_weights_; }

  // Other endpoint of edge e as seen from v.
  VertexId opposite(int e, VertexId v) const;
  // Slot of v within edge e: 0 if v == edges[e].u, 1 if v == edges[e].v.
  int endpoint_slot(int e, VertexId v) const;

  void check_vertex(VertexId v) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<double> vertex_weights_;
  std::vector<std::vector<int>> incident_;
};

// Set-cover instance: universe [m] and a family of n element-id lists.
// Union of all sets must equal [m].
struct SetSystem {
  int m = 0;
  std::vector<std::vector<int>> sets;

  int num_sets() const { return static_cast<int>(sets.size()); }
  int set_size(int j) const { return static_cast<int>(sets[j].size()); }
  void validate() const;
};

// Parsing errors carry the offending line number.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge-list loader. Lines are "u v" or "u v w"; '#' starts a comment;
// labels are arbitrary tokens remapped to dense ids. Duplicate undirected
// edges collapse to the first occurrence; self-loops are rejected.
Graph load_edge_list(std::istream& in, bool weighted,
                     std::vector<std::string>* labels_out = nullptr);

// Set-system loader: first line "m n", then n lines of element ids.
SetSystem load_set_system(std::istream& in);

// Erdos-Renyi G(n, p), deterministic given seed.
Graph gen_er_graph(int n, double p, std::uint64_t seed);

struct PlantedVc {
  Graph graph;
  std::vector<VertexId> cover;  // the planted cover C; V \ C is independent
};

// Planted vertex-cover instance: vertices split C + I with I independent,
// every I vertex attached to at least one C vertex, extra C-C and C-I edges
// with probability extra_p.
PlantedVc gen_planted_vc(int n_cover, int n_free, double extra_p,
                         std::uint64_t seed);

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> back_map;  // new id -> original id
};

InducedSubgraph induced_subgraph(const Graph& g,
                                 const std::vector<VertexId>& keep);

// Subgraph spanned by a subset of edge indices; vertices are the involved
// endpoints, re-densified.
InducedSubgraph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids);

// Caro-Wei lower bound on the independence number: sum over v of 1/(1+deg v).
double caro_wei_bound(const Graph& g);

// BFS ball from the maximum-degree vertex, keeping the first k vertices
// reached; mirrors pruning a large graph down to a workable core.
Graph prune_bfs_ball(const Graph& g, int k);

}  // namespace predgraph
