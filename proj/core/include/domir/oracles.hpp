#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "domir/graph.hpp"

namespace domir {

/// Raised when an exhaustive oracle is asked for an instance above its limit.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int max_n = 16;
  std::size_t max_optima = 64;
};

struct OracleResult {
  int size = 0;
  /// Optimal sets in increasing (size, lexicographic mask) order, capped.
  std::vector<VertexSet> all_optima;
  /// Subsets tested.
  std::uint64_t enumerated = 0;
};

/// Minimum capacitated dominating set over all subsets, smallest first.
OracleResult brute_cds(const CapacitatedInstance& inst, const OracleOptions& opts = {});
/// Largest irredundant set over all subsets.
OracleResult brute_IR(const Graph& g, const OracleOptions& opts = {});
/// Smallest inclusion-maximal irredundant set over all subsets.
OracleResult brute_ir(const Graph& g, const OracleOptions& opts = {});

}  // namespace domir
