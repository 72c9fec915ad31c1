#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ssmkit/cells.hpp"
#include "ssmkit/schur.hpp"

namespace ssmkit {

// n-argument sentinel for the stable (large-n) generating expressions.
inline constexpr int kInfiniteN = -1;

// The exact product expression generating the CSM class of the cell with
// partition lambda (length <= k, padded with zeros):
//   prod z_i^{lambda_i} * prod (1+z_i)^{max(0, n-k-1-lambda_i+i)}
//   * prod_{i<j, lambda_j - j <= n-k-1} (1+z_i-z_j).
RationalSeriesExpr fcsm_expr(const IntVec& lam, int k, int n);

// Same with the ambient total Chern class divided off: denominator powers
// n - max(0, ...) on each (1+z_i).  n = kInfiniteN selects the stable form
//   prod z_i^{lambda_i} prod_{i<j}(1+z_i-z_j) / prod (1+z_i)^{lambda_i+k-i+1}.
RationalSeriesExpr fssm_expr(const IntVec& lam, int k, int n);

enum class ClassKind { CSM, SSM };

// Straightening expansion of the generating expression followed by the
// evaluation into the alpha ring (the beta = 0 class).  Checks (lambda, n)
// compatibility.
TruncatedSeries class_via_genfun(const IntVec& lam, int k, int n,
                                 ClassKind kind, int cap);
// The intermediate Schur expansion of the same route.
SchurSeries schur_via_genfun(const IntVec& lam, int k, int n, ClassKind kind,
                             int cap);

struct TssmFunction {
  Partition lambda;
  int cap = 0;
  SchurSeries series;
  int varsUsed = 0;  // z variables at the detected fixpoint
};

// The stable Schur series
//   S( prod (z_i/(1+z_i))^{lambda_i} prod_{j>=1} prod_{i<=j} (1+z_i-z_j)/(1+z_i) )
// computed with an increasing number of z variables until two consecutive
// truncations agree, plus one guard step.
TssmFunction tssm(const Partition& lam, int cap);

struct OrbitTssmExpansion {
  std::vector<Partition> lambdas;  // the weight-bounded slice of Lambda(I)
  SchurSeries schur;               // sum of the tssm series
  TruncatedSeries value;           // image in the alpha ring
};

// ssm at beta = 0 of the cell as a sum of tssm functions over Lambda(I):
// first k-d parts raised arbitrarily above n-d, remaining parts frozen.
OrbitTssmExpansion ssm_orbit_tssm_expansion(const ColumnSet& I, int cap);

// Sums tssm over all |lambda| <= cap and compares with the series 1.
bool check_sum_to_one(int cap);

struct AlternatingEntry {
  Partition lambda;
  int varsUsed = 0;
  bool pass = true;
  // (mu, coefficient) pairs violating sign(coeff) = (-1)^{|mu|-|lambda|}
  std::vector<std::pair<Partition, Rat>> violations;
};

struct AlternatingReport {
  int maxWeight = 0, cap = 0;
  bool pass = true;
  std::vector<AlternatingEntry> entries;  // lambda order, deterministic
};

// Sign-alternation scan of tssm coefficients for all |lambda| <= maxWeight.
AlternatingReport scan_alternating_signs(int maxWeight, int cap, int jobs = 1);

// Increasing every part by one and n by one shifts every Schur index of the
// CSM expansion by one box per row; verified for t = 1..steps.
bool raising_shift_check(const IntVec& lam, int k, int nStart, int steps);

}  // namespace ssmkit
