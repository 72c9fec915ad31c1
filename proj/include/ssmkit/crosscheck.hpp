#pragma once

#include <string>
#include <vector>

namespace ssmkit {

struct SuiteResult {
  std::string name;
  int comparisons = 0;
  bool pass = true;
  std::vector<std::string> witnesses;  // deterministic order, empty on pass
};

// Registered suite names, in canonical run order:
//   wres        symmetrized weight vs iterated-residue route (beta = 0)
//   genfun      weightfn route vs generating-function route (beta = 0)
//   lambda-sum  direct SSM vs orbit tssm-sum route (beta = 0)
//   sigma-sieve Gamma-region tssm route vs Pascal sieve
//   phi         three-way agreement of the resolution-pushforward class
const std::vector<std::string>& cross_check_suite_names();

// Runs one suite; capOverride < 0 keeps the suite's published default cap.
// `jobs` fans the independent comparisons across that many threads; the
// result (including witness order) is independent of `jobs`.
SuiteResult run_cross_check(const std::string& name, int jobs = 1,
                            int capOverride = -1);

}  // namespace ssmkit
