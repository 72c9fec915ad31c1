#pragma once

#include <vector>

#include "ssmkit/genfun.hpp"
#include "ssmkit/partition.hpp"
#include "ssmkit/schur.hpp"

namespace ssmkit {

struct SigmaClass {
  int k = 0, n = 0, r = 0, cap = 0;
  SchurSeries schur;     // Gamma-region tssm sum, before evaluation
  TruncatedSeries value; // image in the alpha/beta ring
};

// ssm of the degeneracy-locus orbit of corank-pattern r: sums tssm over the
// partitions with part r at least r+l and part r+1 at most r+l (l = n-k),
// weight-truncated, then evaluates.  Lowest graded part is the classical
// determinantal fundamental class.
SigmaClass ssm_sigma_tssm(int k, int n, int r, int cap);

// det( binom(mu_i+s-i + nu_j+(s+l)-j, mu_i+s-i) ), an s x s exact integer
// determinant; the empty determinant (s = 0) is 1.
Int d_determinant(const Partition& mu, const Partition& nu, int s, int l);

enum class PhiMethod { SSS, Determinant, Localization };

struct PhiClass {
  int s = 0, k = 0, n = 0, cap = 0;
  PhiMethod method = PhiMethod::SSS;
  SchurSeries schur;     // filled by the two Schur-expansion methods
  TruncatedSeries value;
};

// The resolution-pushforward class, by one of three independent formulas:
//   SSS: stable straightening expansion of the generating series
//     prod_{i<=s}(z_i/(1+z_i))^{s+l} prod_{j>s} prod_{i<=s}(1+z_i-z_j)/(1+z_i),
//   Determinant: signed d_determinant-weighted Schur sum,
//   Localization: fixed-point sum over s-element subsets of {1..k} with
//     exact denominator cancellation (non-cancellation raises math_error).
PhiClass phi_class(int s, int k, int n, int cap, PhiMethod method);

// Pascal-sieve combination sum_{s>=r} (-1)^{s-r} binom(s,r) Phi^s with
// Phi^0 = 1; equals ssm_sigma_tssm(...).value.
TruncatedSeries ssm_sigma_sieve(int k, int n, int r, int cap);

// Same sieve with binom(s-1,r-1) weights: the ssm class of the closure
// (r = 0 gives the constant 1).
TruncatedSeries ssm_sigma_closure_sieve(int k, int n, int r, int cap);

// The Giambelli-Thom-Porteous fundamental class: the rectangle Schur
// polynomial Sc_{(r+l)^r} evaluated in the alpha/beta ring.
MultiPoly fundamental_class_sigma(int k, int n, int r);

}  // namespace ssmkit
