#include "domir/generators.hpp"

#include <vector>

namespace domir {

std::uint64_t InstanceGenerator::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = 0;
  do {
    x = rng_();
  } while (x >= limit);
  return x % bound;
}

Graph InstanceGenerator::gnp(int n, double p) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform01() < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

CapacitatedInstance InstanceGenerator::capacitated_gnp(int n, double p, int max_capacity) {
  Graph g = gnp(n, p);
  std::vector<int> caps(static_cast<std::size_t>(n));
  for (int& c : caps) c = static_cast<int>(below(static_cast<std::uint64_t>(max_capacity) + 1));
  return CapacitatedInstance(std::move(g), std::move(caps));
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
  return Graph(n, edges);
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  VertexSet reached(g.n());
  reached.insert(0);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next(g.n());
    for (Vertex v : frontier) next |= g.neighbors(v);
    next -= reached;
    reached |= next;
    frontier = std::move(next);
  }
  return reached.count() == g.n();
}

}  // namespace domir
