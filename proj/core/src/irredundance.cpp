#include "domir/irredundance.hpp"

#include <stdexcept>

namespace domir {

namespace {

// Vertices dominated by exactly one member of s.
VertexSet privately_dominated(const Graph& g, const VertexSet& s) {
  VertexSet once(g.n()), twice(g.n());
  for (Vertex v : s) {
    const VertexSet nb = g.closed_neighbors(v);
    twice |= once & nb;
    once |= nb;
  }
  return once - twice;
}

}  // namespace

std::optional<IrredundantWitness> is_irredundant(const Graph& g, const VertexSet& s) {
  const VertexSet priv = privately_dominated(g, s);
  IrredundantWitness w;
  w.unique_of.assign(static_cast<std::size_t>(g.n()), -1);
  for (Vertex v : s) {
    const Vertex u = (g.closed_neighbors(v) & priv).first();
    if (u == -1) return std::nullopt;
    w.unique_of[v] = u;
  }
  return w;
}

bool check_irredundant_witness(const Graph& g, const VertexSet& s, const IrredundantWitness& w) {
  if (static_cast<int>(w.unique_of.size()) != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!s.contains(v) && w.unique_of[v] != -1) return false;
  for (Vertex v : s) {
    const Vertex u = w.unique_of[v];
    if (u < 0 || u >= g.n() || !g.closed_neighbors(v).contains(u)) return false;
    for (Vertex other : s)
      if (other != v && g.closed_neighbors(other).contains(u)) return false;
  }
  return true;
}

bool is_maximal_irredundant(const Graph& g, const VertexSet& s) {
  if (!is_irredundant(g, s)) throw std::invalid_argument("is_maximal_irredundant: set is not irredundant");
  for (Vertex v = 0; v < g.n(); ++v) {
    if (s.contains(v)) continue;
    VertexSet bigger = s;
    bigger.insert(v);
    if (is_irredundant(g, bigger)) return false;
  }
  return true;
}

DoubledGraph build_doubled_graph(const Graph& g) {
  const int n = g.n();
  std::vector<Edge> f;
  f.reserve(static_cast<std::size_t>(2 * g.m() + n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.closed_neighbors(u)) f.emplace_back(u, n + v);
  return {n, Graph(2 * n, f)};
}

bool is_independent_edge_set(const DoubledGraph& h, const std::vector<Edge>& m) {
  const Graph& hg = h.graph;
  VertexSet endpoints(hg.n());
  for (auto [a, b] : m) {
    if (a < 0 || b < 0 || a >= hg.n() || b >= hg.n() || !hg.has_edge(a, b)) return false;
    if (endpoints.contains(a) || endpoints.contains(b) || a == b) return false;
    endpoints.insert(a);
    endpoints.insert(b);
  }
  // Each endpoint may only see its own partner among the endpoints.
  for (auto [a, b] : m) {
    VertexSet seen_a = hg.neighbors(a) & endpoints;
    VertexSet seen_b = hg.neighbors(b) & endpoints;
    seen_a.erase(b);
    seen_b.erase(a);
    if (!seen_a.empty() || !seen_b.empty()) return false;
  }
  return true;
}

VertexSet edge_set_to_irset(const DoubledGraph& h, const IndependentEdgeSet& m) {
  if (!is_independent_edge_set(h, m.edges))
    throw std::invalid_argument("edge_set_to_irset: edge set is not independent");
  VertexSet s(h.base_n);
  for (auto [a, b] : m.edges) s.insert(h.is_left(a) ? a : b);
  return s;
}

IndependentEdgeSet irset_to_edge_set(const DoubledGraph& h, const VertexSet& s, const IrredundantWitness& w) {
  // H does not carry G, so the witness is validated through H: the image is
  // independent exactly when every u(v) is a unique vertex of v.
  if (s.universe() != h.base_n || static_cast<int>(w.unique_of.size()) != h.base_n)
    throw std::invalid_argument("irset_to_edge_set: size mismatch");
  IndependentEdgeSet m;
  for (Vertex v : s) {
    const Vertex u = w.unique_of[v];
    if (u < 0 || u >= h.base_n) throw std::invalid_argument("irset_to_edge_set: missing unique vertex");
    m.edges.emplace_back(h.left(v), h.right(u));
  }
  if (!is_independent_edge_set(h, m.edges))
    throw std::invalid_argument("irset_to_edge_set: witness does not certify the set");
  return m;
}

}  // namespace domir
