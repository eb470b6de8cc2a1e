#include "domir/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace domir {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(u));
    if (adj_[u].contains(v))
      throw std::invalid_argument("Graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
  }
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = adj_[u].next(u + 1); v != -1; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> relabel(static_cast<std::size_t>(n_), -1);
  int k = 0;
  for (Vertex v : keep) relabel[v] = k++;
  std::vector<Edge> sub;
  for (auto [u, v] : edges())
    if (relabel[u] >= 0 && relabel[v] >= 0) sub.emplace_back(relabel[u], relabel[v]);
  return Graph(k, sub);
}

CapacitatedInstance::CapacitatedInstance(Graph g, std::vector<int> caps)
    : graph(std::move(g)), capacity(std::move(caps)) {
  if (static_cast<int>(capacity.size()) != graph.n())
    throw std::invalid_argument("CapacitatedInstance: capacity vector size differs from n");
  const int limit = std::max(0, graph.n() - 1);
  for (int& c : capacity) {
    if (c < 0) throw std::invalid_argument("CapacitatedInstance: negative capacity");
    c = std::min(c, limit);
  }
}

int CapacitatedInstance::max_capacity() const {
  return capacity.empty() ? 0 : *std::max_element(capacity.begin(), capacity.end());
}

std::vector<Vertex> DominationWitness::preimage(Vertex w) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < assignment.size(); ++v)
    if (assignment[v] == w) out.push_back(static_cast<Vertex>(v));
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& w) {
  VertexSet out = w;
  for (Vertex v : w) out |= g.neighbors(v);
  return out;
}

bool is_dominating(const Graph& g, const VertexSet& w) {
  return closed_neighborhood(g, w).count() == g.n();
}

bool check_domination_witness(const CapacitatedInstance& inst, const VertexSet& s,
                              const DominationWitness& witness) {
  const Graph& g = inst.graph;
  if (s.universe() != g.n() || static_cast<int>(witness.assignment.size()) != g.n()) return false;
  std::vector<int> load(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    const Vertex target = witness.assignment[v];
    if (s.contains(v)) {
      if (target != DominationWitness::kUnassigned) return false;
      continue;
    }
    if (target < 0 || target >= g.n() || !s.contains(target) || !g.has_edge(v, target)) return false;
    if (++load[target] > inst.capacity[target]) return false;
  }
  return true;
}

}  // namespace domir
