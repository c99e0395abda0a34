#pragma once

#include <string>
#include <string_view>

#include "melonrep/graph.hpp"
#include "melonrep/oracle.hpp"

namespace melonrep {

inline constexpr std::string_view kReportSchema = "melonrep/1";

struct ReportOptions {
  bool oracle = false;
  bool timings = false;
  SearchBudget budget;
};

/// JSON report for one melon and its line graph. Every certificate is
/// re-verified before it is written; a failure throws VerificationFailed.
/// Output is byte-identical across runs unless timings are requested.
std::string analyze_report(const MelonSpec& spec, const ReportOptions& opts = {});

/// JSON with min_uniform_rep and/or min_perm_rep for `g`. SizeGuard and
/// NodeLimitExceeded propagate.
std::string oracle_report(const Graph& g, std::string_view input, bool uniform, bool perm,
                          const ReportOptions& opts = {});

/// "graph", "line" or "hasse".
std::string dot_output(const MelonSpec& spec, std::string_view what);

}  // namespace melonrep
