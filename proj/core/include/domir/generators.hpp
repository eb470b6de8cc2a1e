#pragma once

#include <cstdint>
#include <random>

#include "domir/graph.hpp"

namespace domir {

/// Seeded instance generator. Draws only from the raw mt19937_64 stream so
/// the same seed yields the same instances on every platform.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Erdős–Rényi G(n, p).
  Graph gnp(int n, double p);
  /// G(n, p) with capacities uniform in {0, ..., max_capacity}.
  CapacitatedInstance capacitated_gnp(int n, double p, int max_capacity);

  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 rng_;
};

/// Every simple graph on n labelled vertices (n <= 7 keeps this small),
/// indexed by an edge mask over the pairs (u, v), u < v, in lexicographic order.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
bool is_connected(const Graph& g);

}  // namespace domir
