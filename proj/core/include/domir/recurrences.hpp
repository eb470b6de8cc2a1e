#pragma once

#include <string>
#include <vector>

namespace domir {

/// One branching inequality 1 >= Σ multiplicity · α^(-removed), or a side
/// condition expressed directly as a margin.
struct RecurrenceCase {
  std::string rule;         // "R1".."R8", or "R4-side"
  std::vector<int> params;  // rule-specific, see parameter_names()
  std::vector<std::pair<long long, int>> branches;  // (multiplicity, vertices removed)
  long double margin = 0;   // 1 - Σ (or α - 9/8 for R4-side)

  enum class Verdict { kPass, kFail, kInconclusive };
  Verdict verdict = Verdict::kPass;

  std::string label() const;
  /// Names of the entries of `params`, e.g. {"d_u", "d_w", "k"} for R6.
  static std::vector<std::string> parameter_names(const std::string& rule);
};

struct RecurrenceReport {
  long double alpha = 0;
  bool all_pass = true;
  int cases_checked = 0;
  long double min_margin = 0;
  std::string binding_case;  // label of the case attaining min_margin
  std::vector<RecurrenceCase> failures;  // failing and inconclusive cases
  std::vector<RecurrenceCase> cases;     // every case, in generation order
};

/// Margins within this distance of zero are reported as inconclusive.
inline constexpr long double kInconclusiveBand = 1e-12L;

/// Every branching inequality of the independent-edge-set search (R1..R8,
/// including all R6/R7 parameter combinations) evaluated for T(n) = α^n.
/// Throws std::invalid_argument for alpha <= 1.
RecurrenceReport verify_recurrences(long double alpha);

/// The list of inequalities, independent of α.
std::vector<RecurrenceCase> enumerate_recurrence_cases();

}  // namespace domir
