#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssmkit/multipoly.hpp"
#include "ssmkit/partition.hpp"

namespace ssmkit {

// Result of normalizing a Schur symbol with arbitrary integer index vector.
struct Straightened {
  bool zero = false;
  int sign = 1;          // meaningful only when !zero
  Partition lam;         // meaningful only when !zero
};

// Normalizes Sc_v via the exchange rule Sc[...,a,b,...] = -Sc[...,b-1,a+1,...]
// (equal neighbors under the rule give zero), dropping trailing zero parts.
Straightened straighten(const IntVec& v);

// Finite linear combination of normalized Schur symbols, truncated by weight.
struct SchurSeries {
  int cap = 0;
  std::map<Partition, Rat, PartLess> terms;

  explicit SchurSeries(int c = 0) : cap(c) {}

  // Adds coeff * Sc_v after straightening; silently drops weight > cap.
  void add(const IntVec& v, const Rat& coeff);
  void add(const Partition& lam, const Rat& coeff);

  Rat coeff(const Partition& lam) const;
  bool is_zero() const { return terms.empty(); }

  SchurSeries& operator+=(const SchurSeries& o);  // cap shrinks to the min
  SchurSeries& operator-=(const SchurSeries& o);
  void scale(const Rat& s);
  bool operator==(const SchurSeries& o) const = default;
};

std::string to_text(const SchurSeries& s);

// Rational generating slice in the z block: num / prod_f (1 + kappa_f z_{i_f})^{p_f}.
// The table of num must contain only a z block.
struct DenFactor {
  int zindex = 1;  // 1-based z variable
  long kappa = 0;
  int power = 1;
};

struct RationalSeriesExpr {
  MultiPoly num;
  std::vector<DenFactor> den;
};

// Power-series expansion through total degree cap (same z table as num).
MultiPoly expand_rational(const RationalSeriesExpr& expr, int cap);

// The basis-symbol operation: reads every z-monomial of a z-polynomial as a
// length-nz integer vector and straightens it.  The workhorse behind both
// generating-function routes.
SchurSeries schur_series_from_zpoly(const MultiPoly& zp, int cap);

// Straightening route applied to a rational slice.
SchurSeries sss_expand(const RationalSeriesExpr& expr, int cap);

// Independent oracle for the same operation via iterated residues at
// infinity: multiplies by the Vandermonde, reads off products of free basis
// symbols c_u, and converts back through Jacobi-Trudi determinants by
// dominance-triangular elimination.  Shares no straightening code.
SchurSeries residue_at_infinity(const RationalSeriesExpr& expr, int cap);

// True when the evaluation homomorphism rho^{k,n} kills Sc_lam
// (criterion: part k+1 exceeds n).
bool rho_kernel_test(const Partition& lam, int k, int n);

// rho^{k,n}(Sc_lam): the Jacobi-Trudi determinant evaluated on the total
// Chern coefficients of the pair of standard bundles; vt must carry exactly
// k alpha and n beta variables.  Always computes the determinant (no kernel
// shortcut) so it can serve as the direct-evaluation oracle.
MultiPoly schur_to_poly(const Partition& lam, const VarTable& vt);

// Degree-d Chern coefficients c_0..c_D of the alternating series
// prod_v(1+b_v t) / prod_u(1+a_u t).
std::vector<MultiPoly> chern_coefficients(const VarTable& vt, int D);

// rho^{k,n} applied term by term (kernel criterion used as a shortcut).
TruncatedSeries apply_rho(const SchurSeries& s, const VarTable& vt, int cap);

}  // namespace ssmkit
