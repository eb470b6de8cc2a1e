#pragma once

#include <chrono>
#include <cstdint>

#include "domir/graph.hpp"
#include "domir/rational.hpp"

namespace domir {

struct CdsResult {
  VertexSet s;
  DominationWitness witness;
  std::uint64_t subsets_examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct CdsOptions {
  /// Stop as soon as a solution meets the lower bound max(1, ⌈n/(1+max c)⌉).
  bool early_exit = true;
  /// Worker threads for the forced-set enumeration; the result does not
  /// depend on this value.
  int workers = 1;
};

/// Minimum capacitated dominating set: solves the simplified problem for
/// every forced set U with |U| <= ⌊n/3⌋, in increasing size and
/// lexicographic order, and keeps the first smallest solution.
CdsResult solve_exact(const CapacitatedInstance& inst, const CdsOptions& opts = {});

/// Same enumeration restricted to |U| <= ⌊c·n⌋, 0 < c < 1/3.
CdsResult solve_approx(const CapacitatedInstance& inst, Rational c, const CdsOptions& opts = {});

/// Enumeration over forced sets of size at most `max_forced`.
CdsResult solve_with_forced_limit(const CapacitatedInstance& inst, int max_forced, const CdsOptions& opts = {});

/// Lower bound used for early exit.
int cds_lower_bound(const CapacitatedInstance& inst);

/// Σ_{k<=kmax} C(n, k); saturates at UINT64_MAX.
std::uint64_t count_subsets_up_to(int n, int kmax);

/// Closed-form ratio guarantees of the forced-set-limited scheme.
struct ApproxBound {
  Rational c;
  /// 1/(4c) + c for c <= 1/4, 2 - 3c above.
  Rational scheme_ratio;
  /// 1/c - 1 for the scheme that tries only tiny or huge sets.
  Rational trivial_ratio;
  /// max of 1 + (1 - c x)(x - 2) over x in [3, 1/c], found numerically.
  double numeric_max = 0.0;
  double argmax = 0.0;
};

/// Throws std::invalid_argument unless 0 < c < 1/3, and std::logic_error if
/// the numeric maximisation disagrees with the closed form by more than 1e-9.
ApproxBound approx_ratio_bound(Rational c);

}  // namespace domir
