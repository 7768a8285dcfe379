#include "predgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "predgraph/rng.hpp"

namespace predgraph {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<double> vertex_weights)
    : n_(n), edges_(std::move(edges)), vertex_weights_(std::move(vertex_weights)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  if (!vertex_weights_.empty()) {
    if (static_cast<int>(vertex_weights_.size()) != n_)
      throw std::invalid_argument("vertex weight count != n");
    for (double w : vertex_weights_)
      if (!(w > 0)) throw std::invalid_argument("vertex weights must be positive");
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  incident_.assign(n_, {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    auto& ed = edges_[e];
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (ed.u == ed.v) throw std::invalid_argument("self-loop");
    if (ed.w < 0) throw std::invalid_argument("negative edge weight");
    auto key = std::minmax(ed.u, ed.v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate undirected edge");
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
}

std::span<const int> Graph::incident_edges(VertexId v) const {
  check_vertex(v);
  return incident_[v];
}

int Graph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(incident_[v].size());
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  out.reserve(incident_[v].size());
  for (int e : incident_[v]) out.push_back(opposite(e, v));
  return out;
}

double Graph::weighted_degree(VertexId v) const {
  check_vertex(v);
  double s = 0;
  for (int e : incident_[v]) s += edges_[e].w;
  return s;
}

double Graph::total_edge_weight() const {
  double s = 0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

double Graph::vertex_weight(VertexId v) const {
  check_vertex(v);
  return vertex_weights_.empty() ? 1.0 : vertex_weights_[v];
}

VertexId Graph::opposite(int e, VertexId v) const {
  const Edge& ed = edges_[e];
  return ed.u == v ? ed.v : ed.u;
}

int Graph::endpoint_slot(int e, VertexId v) const {
  const Edge& ed = edges_[e];
  if (ed.u == v) return 0;
  if (ed.v == v) return 1;
  throw std::invalid_argument("vertex not an endpoint of edge");
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
}

void SetSystem::validate() const {
  std::vector<char> covered(m, 0);
  for (const auto& s : sets) {
    for (int e : s) {
      if (e < 0 || e >= m) throw std::invalid_argument("element id out of range");
      covered[e] = 1;
    }
  }
  for (int i = 0; i < m; ++i)
    if (!covered[i])
      throw std::invalid_argument("infeasible instance: element " +
                                  std::to_string(i) + " uncovered");
}

Graph load_edge_list(std::istream& in, bool weighted,
                     std::vector<std::string>* labels_out) {
  std::map<std::string, VertexId> remap;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;

  auto id_of = [&](const std::string& tok) {
    auto it = remap.find(tok);
    if (it != remap.end()) return it->second;
    VertexId id = static_cast<VertexId>(labels.size());
    remap.emplace(tok, id);
    labels.push_back(tok);
    return id;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b))
      throw ParseError("line " + std::to_string(lineno) + ": expected two tokens");
    double w = 1.0;
    if (weighted) {
      std::string ws;
      if (ls >> ws) {
        try {
          size_t pos = 0;
          w = std::stod(ws, &pos);
          if (pos != ws.size()) throw std::invalid_argument("");
        } catch (...) {
          throw ParseError("line " + std::to_string(lineno) + ": bad weight '" +
                           ws + "'");
        }
        if (w < 0)
          throw ParseError("line " + std::to_string(lineno) +
                                  ": negative weight");
      }
    }
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    VertexId u = id_of(a), v = id_of(b);
    if (u == v)
      throw ParseError("line " + std::to_string(lineno) + ": self-loop");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) continue;  // duplicate, keep first weight
    edges.push_back({u, v, w});
  }
  if (labels_out) *labels_out = labels;
  return Graph(static_cast<int>(labels.size()), std::move(edges));
}

SetSystem load_set_system(std::istream& in) {
  std::string line;
  int lineno = 0;
  int m = -1, n = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (ls >> m >> n) break;
    std::string junk;
    std::istringstream check(line);
    if (check >> junk)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'm n'");
  }
  if (m < 0 || n < 0) throw ParseError("missing header line 'm n'");

  SetSystem ss;
  ss.m = m;
  ss.sets.reserve(n);
  while (static_cast<int>(ss.sets.size()) < n && std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> s;
    int e;
    while (ls >> e) {
      if (e < 0 || e >= m)
        throw ParseError("line " + std::to_string(lineno) +
                                ": element out of range");
      s.push_back(e);
    }
    ss.sets.push_back(std::move(s));
  }
  if (static_cast<int>(ss.sets.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " set lines");
  ss.validate();
  return ss;
}

Graph gen_er_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p < 0 || p > 1) throw std::domain_error("p outside [0,1]");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t key = static_cast<std::uint64_t>(u) * n + v;
      if (keyed_bernoulli(seed, key, p)) edges.push_back({u, v, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

PlantedVc gen_planted_vc(int n_cover, int n_free, double extra_p,
                         std::uint64_t seed) {
  if (n_cover < 1) throw std::invalid_argument("n_cover must be >= 1");
  if (n_free < 0) throw std::invalid_argument("n_free must be >= 0");
  if (extra_p < 0 || extra_p > 1) throw std::domain_error("extra_p outside [0,1]");
  int n = n_cover + n_free;
  // Vertices [0, n_cover) are the cover C; the rest form the independent set I.
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<Edge> edges;
  auto add = [&](VertexId u, VertexId v) {
    auto key = std::minmax(u, v);
    if (seen.insert(key).second) edges.push_back({u, v, 1.0});
  };
  SplitMix rng(splitmix64(seed ^ 0x706c616e746564ULL));
  for (int i = n_cover; i < n; ++i)
    add(static_cast<VertexId>(rng.next_below(n_cover)), i);
  for (int u = 0; u < n_cover; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < extra_p) add(u, v);
  // K1 guard: a lone cover vertex with no free vertices yields an edgeless
  // graph, which is still valid.
  std::vector<VertexId> cover(n_cover);
  std::iota(cover.begin(), cover.end(), 0);
  return {Graph(n, std::move(edges)), std::move(cover)};
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 const std::vector<VertexId>& keep) {
  std::vector<int> new_id(g.num_vertices(), -1);
  std::vector<VertexId> back;
  back.reserve(keep.size());
  for (VertexId v : keep) {
    g.check_vertex(v);
    if (new_id[v] >= 0) continue;
    new_id[v] = static_cast<int>(back.size());
    back.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
      edges.push_back({new_id[e.u], new_id[e.v], e.w});
  std::vector<double> vw;
  if (g.has_vertex_weights()) {
    vw.reserve(back.size());
    for (VertexId v : back) vw.push_back(g.vertex_weight(v));
  }
  return {Graph(static_cast<int>(back.size()), std::move(edges), std::move(vw)),
          std::move(back)};
}

InducedSubgraph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids) {
  std::vector<int> new_id(g.num_vertices(), -1);
  std::vector<VertexId> back;
  auto touch = [&](VertexId v) {
    if (new_id[v] < 0) {
      new_id[v] = static_cast<int>(back.size());
      back.push_back(v);
    }
  };
  for (int e : edge_ids) {
    touch(g.edge(e).u);
    touch(g.edge(e).v);
  }
  std::vector<Edge> edges;
  edges.reserve(edge_ids.size());
  for (int e : edge_ids)
    edges.push_back({new_id[g.edge(e).u], new_id[g.edge(e).v], g.edge(e).w});
  std::vector<double> vw;
  if (g.has_vertex_weights()) {
    vw.reserve(back.size());
    for (VertexId v : back) vw.push_back(g.vertex_weight(v));
  }
  return {Graph(static_cast<int>(back.size()), std::move(edges), std::move(vw)),
          std::move(back)};
}

double caro_wei_bound(const Graph& g) {
  double s = 0;
  for (int v = 0; v < g.num_vertices(); ++v) s += 1.0 / (1.0 + g.degree(v));
  return s;
}

Graph prune_bfs_ball(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  int start = 0;
  for (int v = 1; v < g.num_vertices(); ++v)
    if (g.degree(v) > g.degree(start)) start = v;
  std::vector<char> visited(g.num_vertices(), 0);
  std::vector<VertexId> keep;
  std::deque<VertexId> queue{start};
  visited[start] = 1;
  while (!queue.empty() && static_cast<int>(keep.size()) < k) {
    VertexId v = queue.front();
    queue.pop_front();
    keep.push_back(v);
    for (VertexId u : g.neighbors(v)) {
      if (!visited[u]) {
        visited[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return induced_subgraph(g, keep).graph;
}

}  // namespace predgraph
