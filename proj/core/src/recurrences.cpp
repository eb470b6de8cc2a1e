#include "domir/recurrences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace domir {

std::string RecurrenceCase::label() const {
  std::string s = rule;
  const auto names = parameter_names(rule);
  if (!params.empty()) {
    s += "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ",";
      if (i < names.size()) s += names[i] + "=";
      s += std::to_string(params[i]);
    }
    s += ")";
  }
  return s;
}

std::vector<std::string> RecurrenceCase::parameter_names(const std::string& rule) {
  if (rule == "R4" || rule == "R4-side") return {"k"};
  if (rule == "R6") return {"d_u", "d_w", "k"};
  if (rule == "R7") return {"i1", "i2", "j1", "j2", "k_u", "k_v"};
  if (rule == "R8") return {"i"};
  return {};
}

std::vector<RecurrenceCase> enumerate_recurrence_cases() {
  std::vector<RecurrenceCase> out;
  auto add = [&](std::string rule, std::vector<int> params, std::vector<std::pair<long long, int>> branches) {
    // Zero-multiplicity branches contribute nothing.
    std::erase_if(branches, [](const auto& b) { return b.first == 0; });
    out.push_back({std::move(rule), std::move(params), std::move(branches)});
  };

  add("R1", {}, {{1, 1}});
  add("R2", {}, {{1, 2}});
  add("R3", {}, {{1, 2}, {1, 3}});
  // Larger k only loosens the inequality while α > (k+1)/k, which the side
  // condition checks at k = 8.
  add("R4", {8}, {{1, 1}, {8, 10}});
  add("R4-side", {8}, {});
  add("R5", {}, {{3, 4}});
  for (int du = 3; du <= 7; ++du)
    for (int dw = 3; dw <= 7; ++dw)
      for (int k = 0; k < std::min(du, dw); ++k)
        add("R6", {du, dw, k},
            {{1, du + 2}, {1, dw + 2}, {1, 3}, {static_cast<long long>(du - k - 1) * (dw - k - 1), du + dw + 2 - k}});
  for (int i1 = 3; i1 <= 7; ++i1)
    for (int i2 = 3; i2 <= 7; ++i2)
      for (int j1 = 1; j1 <= 7; ++j1)
        for (int j2 = 1; j2 <= 7; ++j2)
          for (int ku = 0; ku < std::min(i1, i2); ++ku)
            for (int kv = 0; kv < std::min(j1, j2); ++kv)
              add("R7", {i1, i2, j1, j2, ku, kv},
                  {{5, 6},
                   {static_cast<long long>(i1 - ku - 1) * (i2 - ku - 1), i1 + i2 - ku + 3},
                   {static_cast<long long>(j1 - kv - 1) * (j2 - kv - 1), j1 + j2 - kv + 6}});
  for (int i = 3; i <= 7; ++i) add("R8", {i}, {{1, 1}, {i, i + 4}});
  return out;
}

RecurrenceReport verify_recurrences(long double alpha) {
  if (!(alpha > 1.0L)) throw std::invalid_argument("verify_recurrences: alpha must exceed 1");
  RecurrenceReport report;
  report.alpha = alpha;
  report.cases = enumerate_recurrence_cases();
  report.min_margin = INFINITY;
  for (auto& c : report.cases) {
    if (c.rule == "R4-side") {
      const long double k = c.params[0];
      c.margin = alpha - (k + 1.0L) / k;
    } else {
      long double sum = 0;
      for (auto [mult, removed] : c.branches) sum += static_cast<long double>(mult) * std::pow(alpha, -removed);
      c.margin = 1.0L - sum;
    }
    if (std::fabs(c.margin) <= kInconclusiveBand) {
      c.verdict = RecurrenceCase::Verdict::kInconclusive;
    } else {
      c.verdict = c.margin > 0 ? RecurrenceCase::Verdict::kPass : RecurrenceCase::Verdict::kFail;
    }
    if (c.verdict != RecurrenceCase::Verdict::kPass) {
      report.all_pass = false;
      report.failures.push_back(c);
    }
    if (c.margin < report.min_margin) {
      report.min_margin = c.margin;
      report.binding_case = c.label();
    }
    ++report.cases_checked;
  }
  return report;
}

}  // namespace domir
