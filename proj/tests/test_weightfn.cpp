#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ssmkit/genfun.hpp"
#include "ssmkit/weightfn.hpp"
#include "test_util.hpp"

using namespace ssmkit;
using testutil::pconst;
using testutil::pvar;

namespace {

MultiPoly av(const VarTable& vt, int u) {
  return MultiPoly::variable(vt, vt.alpha(u));
}
MultiPoly bv(const VarTable& vt, int v) {
  return MultiPoly::variable(vt, vt.beta(v));
}

// e(V) for Hom(C^k, C^n): the product of all weights beta_v - alpha_u.
MultiPoly euler_total(int k, int n) {
  VarTable vt = cell_table(k, n);
  MultiPoly e = pconst(vt, 1);
  for (int v = 1; v <= n; ++v)
    for (int u = 1; u <= k; ++u) e = e * (bv(vt, v) - av(vt, u));
  return e;
}

// The symmetrized product of the weights away from the bullet positions:
// (1/(k-d)!) sum_{sigma in S_k} sigma_alpha prod_{(v,u) not in A0}
// (beta_v - alpha_u).  Independent reconstruction of the top graded part.
MultiPoly top_part_oracle(const ColumnSet& I) {
  const int k = I.k, n = I.n;
  VarTable vt = cell_table(k, n);
  CellGeometry g = cell_geometry(I);
  MultiPoly base = pconst(vt, 1);
  for (int v = 1; v <= n; ++v)
    for (int u = 1; u <= k; ++u) {
      if (std::find(g.A0.begin(), g.A0.end(), MatrixPos{v, u}) != g.A0.end())
        continue;
      base = base * (bv(vt, v) - av(vt, u));
    }
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  MultiPoly acc = MultiPoly::zero(vt);
  do {
    std::vector<int> to(vt.total());
    for (int i = 0; i < vt.total(); ++i) to[i] = i;
    for (int u = 1; u <= k; ++u) to[vt.alpha(u)] = vt.alpha(perm[u - 1] + 1);
    acc += rename_vars(base, vt, to);
  } while (std::next_permutation(perm.begin(), perm.end()));
  acc.scale(Rat(1) / Rat(factorial(k - I.d())));
  return acc;
}

}  // namespace

TEST_CASE("weight polynomials of the four smallest cells") {
  VarTable v12 = cell_table(1, 2);
  MultiPoly a1 = av(v12, 1), b1 = bv(v12, 1), b2 = bv(v12, 2);
  CHECK(weight_function(ColumnSet(1, 2, {1})) == pconst(v12, 1) + b2 - a1);
  CHECK(weight_function(ColumnSet(1, 2, {2})) == b1 - a1);
  CHECK(weight_function(ColumnSet(1, 2, {})) == (b1 - a1) * (b2 - a1));

  VarTable v22 = cell_table(2, 2);
  MultiPoly w = pconst(v22, 1) + bv(v22, 1) + bv(v22, 2) +
                bv(v22, 1) * bv(v22, 2) * Rat(2) -
                (av(v22, 1) + av(v22, 2)) * (bv(v22, 1) + bv(v22, 2)) -
                av(v22, 1) - av(v22, 2) + av(v22, 1) * av(v22, 2) * Rat(2);
  CHECK(weight_function(ColumnSet(2, 2, {1, 2})) == w);
  CHECK(to_text(weight_function(ColumnSet(1, 2, {1}))) == "1 + b2 - a1");
}

TEST_CASE("weight degree, integrality, and the dense-orbit normalization") {
  for (const ColumnSet& I : enumerate_orbits(2, 3)) {
    MultiPoly w = weight_function(I);
    CHECK(w.degree() == 2 * 3 - I.d());
    for (const auto& t : w.terms) CHECK(is_integer(t.c));
  }
  // k = 0: one orbit, unit class
  MultiPoly w0 = weight_function(ColumnSet(0, 2, {}));
  CHECK(w0 == pconst(cell_table(0, 2), 1));
}

TEST_CASE("graded end terms: fundamental class below, weight product on top") {
  for (int k = 1; k <= 2; ++k)
    for (int n = k; n <= 3; ++n)
      for (const ColumnSet& I : enumerate_orbits(k, n)) {
        MultiPoly w = weight_function(I);
        // top part: symmetrized off-bullet weight product
        CHECK(graded_component(w, n * k - I.d()) == top_part_oracle(I));

        // lowest beta = 0 part: the Schur polynomial of the cell partition
        MultiPoly w0 = weight_function_beta0(I);
        CellGeometry g = cell_geometry(I);
        IntVec lamv = lambda_of_set(I);
        while (!lamv.empty() && lamv.back() == 0) lamv.pop_back();
        SchurSeries fc(g.codim());
        fc.add(Partition(lamv), Rat(1));
        MultiPoly fund = apply_rho(fc, alpha_table(k), g.codim()).p;
        CHECK(graded_component(w0, g.codim()) == fund);
        CHECK(w0.low_degree() == g.codim());
      }
}

TEST_CASE("residue route to the beta-free weight") {
  VarTable at = alpha_table(1);
  CHECK(weight_function_residue_beta0(ColumnSet(1, 2, {2})) ==
        -pvar(at, at.alpha(1)));
  CHECK(weight_function_residue_beta0(ColumnSet(1, 2, {})) ==
        pvar(at, at.alpha(1)) * pvar(at, at.alpha(1)));

  for (int k = 1; k <= 2; ++k)
    for (int n = k; n <= 3; ++n)
      for (const ColumnSet& I : enumerate_orbits(k, n))
        CHECK(weight_function_residue_beta0(I) == weight_function_beta0(I));
}

TEST_CASE("csm and ssm classes are the weight over the ambient Chern class") {
  ColumnSet I(2, 3, {1, 3});
  const int cap = 7;
  CsmClass csm = csm_cell(I);
  CHECK(csm.poly == weight_function(I));

  CsmClass ssm = ssm_cell(I, cap);
  VarTable vt = cell_table(2, 3);
  MultiPoly cV = pconst(vt, 1);
  for (int v = 1; v <= 3; ++v)
    for (int u = 1; u <= 2; ++u)
      cV = cV * (pconst(vt, 1) + bv(vt, v) - av(vt, u));
  CHECK(truncate(ssm.series.p * cV, cap) == truncate(csm.poly, cap));

  // beta = 0 route: same relation with denominator (1 - a_u)^n
  CsmClass ssm0 = ssm_cell_beta0(I, cap);
  VarTable at = alpha_table(2);
  MultiPoly cV0 = pconst(at, 1);
  for (int u = 1; u <= 2; ++u)
    cV0 = cV0 * pow(pconst(at, 1) - pvar(at, at.alpha(u)), 3);
  CHECK(truncate(ssm0.series.p * cV0, cap) ==
        truncate(weight_function_beta0(I), cap));

  CHECK_THROWS_AS(ssm_cell(I, cell_geometry(I).codim() - 1), arg_error);
}

TEST_CASE("interpolation axioms hold for the weight family") {
  for (int k : {1, 2}) {
    const int n = 3;
    OrbitClassList classes;
    for (const ColumnSet& I : enumerate_orbits(k, n))
      classes.push_back({I, weight_function(I)});
    AxiomReport rep = verify_interpolation_axioms(classes, k, n);
    CHECK(rep.pass);
    CHECK(rep.failures().empty());
    CHECK(rep.checks.size() >= classes.size() * classes.size());
  }

  // grouped restriction identity at a sample cell: phi(W) = c(T) e(N)
  ColumnSet I(1, 2, {1});
  CellGeometry g = cell_geometry(I);
  VarTable vt = cell_table(1, 2);
  CHECK(phi_restriction(weight_function(I), I) ==
        tangent_chern_restricted(g, vt) * normal_euler_restricted(g, vt));

  // single-orbit k = 0 family
  OrbitClassList lone;
  lone.push_back({ColumnSet(0, 2, {}), weight_function(ColumnSet(0, 2, {}))});
  CHECK(verify_interpolation_axioms(lone, 0, 2).pass);

  OrbitClassList missing;  // dropped orbits are rejected
  missing.push_back({ColumnSet(1, 2, {1}), weight_function(ColumnSet(1, 2, {1}))});
  CHECK_THROWS_AS(verify_interpolation_axioms(missing, 1, 2), arg_error);
}

TEST_CASE("euler-multiple perturbations never pass the axiom check") {
  const int k = 2, n = 3;
  MultiPoly eV = euler_total(k, n);
  VarTable vt = cell_table(k, n);
  std::mt19937 rng(424242);
  for (int round = 0; round < 5; ++round) {
    OrbitClassList classes;
    for (const ColumnSet& I : enumerate_orbits(k, n))
      classes.push_back({I, weight_function(I)});
    MultiPoly q = pconst(vt, 1 + static_cast<int>(rng() % 5));
    if (rng() % 2 == 0)
      q = q * MultiPoly::variable(vt, static_cast<int>(rng() % vt.total()));
    std::size_t which = rng() % classes.size();
    classes[which].second += eV * q;
    AxiomReport rep = verify_interpolation_axioms(classes, k, n);
    CHECK(!rep.pass);
    CHECK(!rep.failures().empty());
    for (const AxiomCheck* f : rep.failures()) CHECK(!f->witness.empty());
  }
}

TEST_CASE("coordinate arrangement classes for the two-torus example") {
  VarTable vt = cell_table(1, 1);
  MultiPoly a = av(vt, 1), b = bv(vt, 1);
  std::vector<MultiPoly> weights = {a, b * Rat(2), MultiPoly::zero(vt)};

  CoordRegion X = CoordRegion::subspace(3, {1});
  CoordRegion Y = CoordRegion::subspace(3, {2});

  CHECK(csm_coordinate_arrangement(weights, X) ==
        (pconst(vt, 1) + b * Rat(2)) * a);
  CHECK(csm_coordinate_arrangement(weights, Y) ==
        (pconst(vt, 1) + a) * b * Rat(2));
  CHECK(csm_coordinate_arrangement(weights, X.intersect(Y)) ==
        a * b * Rat(2));
  CHECK(csm_coordinate_arrangement(weights, X.unite(Y)) ==
        a + b * Rat(2) + a * b * Rat(2));
  CHECK(csm_coordinate_arrangement(weights, CoordRegion::whole(3)) ==
        (pconst(vt, 1) + a) * (pconst(vt, 1) + b * Rat(2)));

  // inclusion-exclusion consistency: csm(XuY) + csm(XnY) = csm(X) + csm(Y)
  CHECK(csm_coordinate_arrangement(weights, X.unite(Y)) +
            csm_coordinate_arrangement(weights, X.intersect(Y)) ==
        csm_coordinate_arrangement(weights, X) +
            csm_coordinate_arrangement(weights, Y));

  CHECK_THROWS_AS(CoordRegion::subspace(3, {4}), arg_error);
  CHECK_THROWS_AS(csm_coordinate_arrangement({a}, X), arg_error);
  CHECK_THROWS_AS(csm_coordinate_arrangement({a, a * a, b}, X), arg_error);
}

TEST_CASE("full-rank cell class variants agree with their base routes") {
  const int cap = 6;
  for (int n = 2; n <= 4; ++n)
    for (const ColumnSet& I : enumerate_orbits(2, n)) {
      if (!I.full_rank()) continue;

      SchubertCellClass mc =
          schubert_cell_classes(I, SchubertVariant::MatrixCSM, cap);
      CHECK(mc.value_poly == weight_function(I));
      // generating form evaluates back to the beta-free weight
      TruncatedSeries img =
          apply_rho(mc.schur_form, alpha_table(2), mc.value_poly.degree());
      CHECK(img.p == weight_function_beta0(I));

      SchubertCellClass ms =
          schubert_cell_classes(I, SchubertVariant::MatrixSSM, cap);
      CHECK(ms.value == ssm_cell(I, cap).series);
      TruncatedSeries simg = apply_rho(ms.schur_form, alpha_table(2), cap);
      CHECK(simg.p == ssm_cell_beta0(I, cap).series.p);
    }

  // the quotient-ring variant coincides with the matrix one at k = 1
  for (int n = 2; n <= 4; ++n)
    for (int col = 1; col <= n; ++col) {
      ColumnSet I(1, n, {col});
      SchubertCellClass gc =
          schubert_cell_classes(I, SchubertVariant::GrassmannianCSM, cap);
      CHECK(gc.value.p == truncate(weight_function(I), cap));
      TruncatedSeries gimg = apply_rho(gc.schur_form, alpha_table(1), cap);
      CHECK(gimg.p == truncate(weight_function_beta0(I), cap));
    }

  CHECK_THROWS_AS(
      schubert_cell_classes(ColumnSet(2, 3, {1}), SchubertVariant::MatrixCSM, 5),
      arg_error);
}

TEST_CASE("rectangle coefficients of the quotient-ring expansion are nonneg") {
  for (int k = 1; k <= 2; ++k)
    for (int n = k; n <= 5; ++n)
      for (const ColumnSet& I : enumerate_orbits(k, n)) {
        if (!I.full_rank()) continue;
        const int cap = k * (n - k);
        SchubertCellClass gc =
            schubert_cell_classes(I, SchubertVariant::GrassmannianCSM, cap);
        Partition rect(std::vector<int>(k, n - k));
        for (const auto& [lam, c] : gc.schur_form.terms) {
          if (!rect.contains(lam)) continue;
          CHECK(c >= 0);
        }
      }
}
