#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ssmkit/cells.hpp"
#include "ssmkit/multipoly.hpp"
#include "ssmkit/schur.hpp"

namespace ssmkit {

// The standard ring for a cell of Hom(C^k, C^n): a1..ak, b1..bn.
VarTable cell_table(int k, int n);
// The beta = 0 ring: a1..ak only.
VarTable alpha_table(int k);

// The single-orbit product before symmetrization (denominator factors
// (a_u - a_v), u <= d < ... omitted; they are supplied as den pairs).
MultiPoly weight_numerator(const ColumnSet& I, const VarTable& vt);

// The symmetrized weight function: degree nk-d, integer coefficients; both
// facts are re-checked and violations raise an internal-consistency error.
MultiPoly weight_function(const ColumnSet& I);

// beta -> 0 image of weight_function, in the alpha-only ring.
MultiPoly weight_function_beta0(const ColumnSet& I);

// Independent route to the same polynomial through the iterated-residue
// numerator: expands a z-polynomial and reads each monomial as a product of
// Chern coefficients of -(C^k) with a uniform index shift of k-1.
MultiPoly weight_function_residue_beta0(const ColumnSet& I);

struct CsmClass {
  enum class Kind { CSM, SSM };
  Kind kind = Kind::CSM;
  int k = 0, n = 0;
  bool beta0 = false;
  MultiPoly poly;          // CSM payload (exact)
  TruncatedSeries series;  // SSM payload (capped)
};

CsmClass csm_cell(const ColumnSet& I);
CsmClass ssm_cell(const ColumnSet& I, int cap);  // cap >= codim required
CsmClass csm_cell_beta0(const ColumnSet& I);
CsmClass ssm_cell_beta0(const ColumnSet& I, int cap);

// ---- interpolation axioms ----------------------------------------------

struct AxiomCheck {
  ColumnSet omega, theta;
  int axiom = 0;  // 1..4
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  bool pass = true;
  std::vector<AxiomCheck> checks;  // deterministic (omega, theta, axiom) order
  std::vector<const AxiomCheck*> failures() const;
  std::string summary() const;
};

using OrbitClassList = std::vector<std::pair<ColumnSet, MultiPoly>>;

// Checks the four interpolation conditions on a full family of candidate
// CSM classes (one polynomial per orbit of Hom(C^k, C^n)):
//   (1) restriction at the own fixed point equals c(T) e(N);
//   (2) every restriction is divisible by c(T) of the target cell;
//   (3) foreign restrictions have degree < nk - d of the target;
//   (4) restrictions vanish at cells outside the closure.
AxiomReport verify_interpolation_axioms(const OrbitClassList& classes, int k,
                                        int n);

// c(T) and e(N) of a cell after its own restriction map, as used by the
// verifier; exposed for tests.
MultiPoly tangent_chern_restricted(const CellGeometry& g, const VarTable& vt);
MultiPoly normal_euler_restricted(const CellGeometry& g, const VarTable& vt);

// ---- coordinate arrangements ---------------------------------------------

// Integer combination of indicator functions of coordinate subspaces of a
// torus representation with diagonal weights.  Key: bitmask of vanishing
// coordinates.
struct CoordRegion {
  int nvars = 0;
  std::map<std::uint64_t, long> parts;

  static CoordRegion whole(int nvars);
  // Subspace cut out by the vanishing of the listed coordinates (1-based).
  static CoordRegion subspace(int nvars, const std::vector<int>& zeros);

  CoordRegion unite(const CoordRegion& o) const;      // X u Y
  CoordRegion intersect(const CoordRegion& o) const;  // X n Y
};

// CSM class of the region: additive combination of the per-subspace values
// prod_kept (1 + w) * prod_dropped w.
MultiPoly csm_coordinate_arrangement(const std::vector<MultiPoly>& weights,
                                     const CoordRegion& region);

// ---- ordinary Schubert cell variants (full-rank only) --------------------

enum class SchubertVariant { MatrixCSM, GrassmannianCSM, MatrixSSM };

struct SchubertCellClass {
  SchubertVariant variant = SchubertVariant::MatrixCSM;
  int k = 0, n = 0, cap = 0;
  MultiPoly value_poly;    // MatrixCSM only: the exact polynomial
  TruncatedSeries value;   // capped value in the alpha/beta ring
  SchurSeries schur_form;  // the generating-function expansion (beta = 0)
};

SchubertCellClass schubert_cell_classes(const ColumnSet& I, SchubertVariant v,
                                        int cap);

}  // namespace ssmkit
