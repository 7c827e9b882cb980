// Closed form vs. oracle over the standard parameter grid.
#pragma once

#include <string>
#include <vector>

#include "vcoh/figures.hpp"
#include "vcoh/oracle.hpp"

namespace vcoh {

struct VerifyCase {
  std::string regime;  // "weak" (t in [0, 100]) or "strong" (t in [0, 10])
  NamedState state;
  SystemParams params;
  double tMax = 0.0;
};

/// {weak, strong} x delta {0, 5, 10, 20} x theta {0, 0.5, 1} x the three named states.
std::vector<VerifyCase> oracleEquivalenceGrid();

struct VerifyResult {
  VerifyCase testCase;
  CompareReport report;
};

/// Runs every grid case with the given method at its default step, comparing
/// on at most ~maxSamples recorded points per trajectory. tMaxCap > 0 shortens
/// every case to min(tMax, tMaxCap).
std::vector<VerifyResult> runOracleEquivalence(OracleMethod method, double tolerance = 1e-6,
                                               double tMaxCap = 0.0, long maxSamples = 100000);

}  // namespace vcoh
