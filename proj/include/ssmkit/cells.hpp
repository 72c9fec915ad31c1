#pragma once

#include <string>
#include <vector>

#include "ssmkit/multipoly.hpp"
#include "ssmkit/partition.hpp"

namespace ssmkit {

// A cell of Hom(C^k, C^n) under GL_k x B^-_n: the strictly increasing column
// set {j_1 < ... < j_d} with d <= k, j_i in {1..n}.
struct ColumnSet {
  int k = 0;
  int n = 0;
  std::vector<int> cols;  // strictly increasing, 1-based

  ColumnSet() = default;
  ColumnSet(int k_, int n_, std::vector<int> cols_);

  int d() const { return (int)cols.size(); }
  bool full_rank() const { return d() == k; }
  std::string str() const;  // "{2,5}" / "{}"
  bool operator==(const ColumnSet& o) const {
    return k == o.k && n == o.n && cols == o.cols;
  }
};

// All subsets of {1..n} of size <= k; size descending, then lexicographic.
std::vector<ColumnSet> enumerate_orbits(int k, int n);

// lambda_a = i_{k+1-a} - (k+1-a) with the padding i_{d+a} = n+a.  Length-k
// vector, trailing zeros kept.
IntVec lambda_of_set(const ColumnSet& I);

// Inverse: i_a = lambda_{k+1-a} + a, keeping only entries <= n.  The dropped
// entries must form the interval {n+1, ..., n+q}; otherwise the (lambda, n)
// pair is incompatible and we throw naming the violating gap.
ColumnSet set_of_lambda(const IntVec& lam, int k, int n);

struct MatrixPos {
  int v = 0;  // row    in {1..n}
  int u = 0;  // column in {1..k}
  bool operator==(const MatrixPos& o) const { return v == o.v && u == o.u; }
  bool operator<(const MatrixPos& o) const {
    return v != o.v ? v < o.v : u < o.u;
  }
};

using PosSet = std::vector<MatrixPos>;  // kept sorted

struct CellGeometry {
  ColumnSet I;
  PosSet A0, A1, A2, A3, A4;
  PosSet T;  // A0 u A2 u A4, the tangent positions
  PosSet N;  // complement of T in {1..n} x {1..k}
  std::vector<std::vector<int>> representative;  // n x k 0/1 matrix

  int dim() const { return (int)T.size(); }
  int codim() const { return (int)N.size(); }
};

CellGeometry cell_geometry(const ColumnSet& I);

// Omega_J <= Omega_I in the closure order iff |J n {1..r}| <= |I n {1..r}|
// for every r.
bool closure_leq(const ColumnSet& J, const ColumnSet& I);

// The restriction to the fixed point of Omega_J: alpha_u -> beta_{j_u} for
// u <= d, identity on the remaining alphas and all betas.
std::vector<int> phi_restriction_map(const ColumnSet& J, const VarTable& vt);
MultiPoly phi_restriction(const MultiPoly& p, const ColumnSet& J);

}  // namespace ssmkit
