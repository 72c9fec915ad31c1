#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ssmkit/cells.hpp"
#include "ssmkit/weightfn.hpp"
#include "test_util.hpp"

using namespace ssmkit;
using testutil::random_poly;

namespace {

Partition to_partition(const IntVec& lam) {
  IntVec p = lam;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Partition(p);
}

PosSet positions(std::vector<std::pair<int, int>> vu) {
  PosSet out;
  for (auto [v, u] : vu) out.push_back({v, u});
  return out;
}

}  // namespace

TEST_CASE("orbit enumeration: order, counts, and bounds") {
  auto orbits = enumerate_orbits(2, 3);
  REQUIRE(orbits.size() == 7);
  CHECK(orbits[0].cols == std::vector<int>{1, 2});
  CHECK(orbits[1].cols == std::vector<int>{1, 3});
  CHECK(orbits[2].cols == std::vector<int>{2, 3});
  CHECK(orbits[3].cols == std::vector<int>{1});
  CHECK(orbits[4].cols == std::vector<int>{2});
  CHECK(orbits[5].cols == std::vector<int>{3});
  CHECK(orbits[6].cols.empty());

  for (int k = 0; k <= 4; ++k)
    for (int n = k; n <= 6; ++n) {
      Int want = 0;
      for (int d = 0; d <= k; ++d) want += binomial(n, d);
      CHECK(Int(enumerate_orbits(k, n).size()) == want);
    }

  auto trivial = enumerate_orbits(0, 5);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].cols.empty());

  CHECK_THROWS_AS(enumerate_orbits(3, 2), arg_error);
  CHECK_THROWS_AS(ColumnSet(2, 3, {1, 1}), arg_error);
  CHECK_THROWS_AS(ColumnSet(2, 3, {0}), arg_error);
  CHECK_THROWS_AS(ColumnSet(2, 3, {4}), arg_error);
  CHECK_THROWS_AS(ColumnSet(1, 3, {1, 2}), arg_error);
}

TEST_CASE("column set to partition dictionary") {
  // the seven cells of the 2x3 case, in enumeration order
  const std::vector<IntVec> expected = {{0, 0}, {1, 0}, {1, 1}, {2, 0},
                                        {2, 1}, {2, 2}, {3, 3}};
  auto orbits = enumerate_orbits(2, 3);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    CHECK(lambda_of_set(orbits[i]) == expected[i]);

  // (3,1) needs at least four columns; with exactly four the top index
  // overflows and is dropped
  CHECK(set_of_lambda({3, 1}, 2, 4) == ColumnSet(2, 4, {2}));
  CHECK(set_of_lambda({3, 1}, 2, 5) == ColumnSet(2, 5, {2, 5}));
  CHECK(set_of_lambda({3, 1}, 2, 6) == ColumnSet(2, 6, {2, 5}));
  CHECK_THROWS_AS(set_of_lambda({3, 1}, 2, 3), arg_error);

  // the zero partition is the identity-pattern full-rank cell
  CHECK(set_of_lambda({0, 0, 0}, 3, 5) == ColumnSet(3, 5, {1, 2, 3}));

  CHECK_THROWS_AS(set_of_lambda({1, 2}, 2, 4), arg_error);   // increasing
  CHECK_THROWS_AS(set_of_lambda({2, -1}, 2, 4), arg_error);  // negative
}

TEST_CASE("conversion round-trips across the full small grid") {
  for (int k = 0; k <= 4; ++k)
    for (int n = k; n <= 6; ++n)
      for (const ColumnSet& I : enumerate_orbits(k, n)) {
        IntVec lam = lambda_of_set(I);
        CHECK(static_cast<int>(lam.size()) == k);
        for (std::size_t a = 0; a + 1 < lam.size(); ++a)
          CHECK(lam[a] >= lam[a + 1]);
        CHECK(set_of_lambda(lam, k, n) == I);
      }
}

TEST_CASE("tangent and normal position sets") {
  // zero cell: a point, everything is normal
  CellGeometry g0 = cell_geometry(ColumnSet(2, 3, {}));
  CHECK(g0.T.empty());
  CHECK(g0.dim() == 0);
  CHECK(g0.codim() == 6);
  CHECK(g0.A0.empty());
  CHECK(g0.A1.empty());
  CHECK(g0.A2.empty());
  CHECK(g0.A4.empty());
  CHECK(g0.A3.size() == 6);

  // the staircase cell {1,3} of the 2x3 case, position by position
  CellGeometry g = cell_geometry(ColumnSet(2, 3, {1, 3}));
  CHECK(g.A0 == positions({{1, 1}, {3, 2}}));
  CHECK(g.A1 == positions({{1, 2}, {2, 2}}));
  CHECK(g.A2 == positions({{2, 1}, {3, 1}}));
  CHECK(g.A3.empty());
  CHECK(g.A4 == positions({{1, 2}}));  // overlaps A1: unions, not a partition
  CHECK(g.T == positions({{1, 1}, {1, 2}, {2, 1}, {3, 1}, {3, 2}}));
  CHECK(g.N == positions({{2, 2}}));
  CHECK(g.dim() == 5);
  CHECK(g.codim() == 1);

  REQUIRE(g.representative.size() == 3);
  REQUIRE(g.representative[0].size() == 2);
  for (int v = 1; v <= 3; ++v)
    for (int u = 1; u <= 2; ++u) {
      int want = ((v == 1 && u == 1) || (v == 3 && u == 2)) ? 1 : 0;
      CHECK(g.representative[v - 1][u - 1] == want);
    }

  for (const ColumnSet& I : enumerate_orbits(2, 3))
    CHECK(cell_geometry(I).dim() + cell_geometry(I).codim() == 6);
}

TEST_CASE("codimension equals the partition weight") {
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 6; ++n)
      for (const ColumnSet& I : enumerate_orbits(k, n)) {
        IntVec lam = lambda_of_set(I);
        int w = 0;
        for (int x : lam) w += x;
        CHECK(cell_geometry(I).codim() == w);
      }
}

TEST_CASE("closure order: pinned pairs and order axioms") {
  ColumnSet empty(2, 3, {}), c13(2, 3, {1, 3}), c2(2, 3, {2});
  CHECK(closure_leq(c2, c13));
  CHECK(!closure_leq(c13, c2));
  for (const ColumnSet& I : enumerate_orbits(2, 3))
    CHECK(closure_leq(empty, I));

  auto orbits = enumerate_orbits(2, 4);
  for (const ColumnSet& a : orbits) {
    CHECK(closure_leq(a, a));
    CHECK(closure_leq(a, ColumnSet(2, 4, {1, 2})));  // unique maximum
    for (const ColumnSet& b : orbits) {
      if (closure_leq(a, b) && closure_leq(b, a)) CHECK(a == b);
      for (const ColumnSet& c : orbits)
        if (closure_leq(a, b) && closure_leq(b, c)) CHECK(closure_leq(a, c));
    }
  }

  CHECK_THROWS_AS(closure_leq(ColumnSet(2, 3, {1}), ColumnSet(2, 4, {1})),
                  arg_error);

  // the enumeration order refines the closure order downward: a later
  // orbit never strictly dominates an earlier one
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t j = i + 1; j < orbits.size(); ++j)
      CHECK(!(closure_leq(orbits[i], orbits[j]) && !(orbits[i] == orbits[j])));
}

TEST_CASE("closure order on full-rank cells is diagram containment") {
  for (int n = 2; n <= 5; ++n) {
    auto orbits = enumerate_orbits(2, n);
    for (const ColumnSet& J : orbits) {
      if (!J.full_rank()) continue;
      for (const ColumnSet& I : orbits) {
        if (!I.full_rank()) continue;
        Partition lj = to_partition(lambda_of_set(J));
        Partition li = to_partition(lambda_of_set(I));
        CHECK(closure_leq(J, I) == lj.contains(li));
      }
    }
  }
}

TEST_CASE("restriction maps are ring maps with the pinned values") {
  ColumnSet I1(1, 2, {1});
  MultiPoly w = weight_function(I1);
  MultiPoly restricted = phi_restriction(w, I1);
  VarTable vt = cell_table(1, 2);
  MultiPoly expect = MultiPoly::constant(vt, 1) +
                     MultiPoly::variable(vt, vt.beta(2)) -
                     MultiPoly::variable(vt, vt.beta(1));
  CHECK(restricted == expect);

  // beta variables are fixed
  ColumnSet J(2, 3, {1, 3});
  VarTable vt23 = cell_table(2, 3);
  for (int v = 1; v <= 3; ++v) {
    MultiPoly bv = MultiPoly::variable(vt23, vt23.beta(v));
    CHECK(phi_restriction(bv, J) == bv);
  }
  // alpha_u goes to beta_{j_u} for u <= d, stays for u > d
  CHECK(phi_restriction(MultiPoly::variable(vt23, vt23.alpha(1)), J) ==
        MultiPoly::variable(vt23, vt23.beta(1)));
  CHECK(phi_restriction(MultiPoly::variable(vt23, vt23.alpha(2)), J) ==
        MultiPoly::variable(vt23, vt23.beta(3)));
  ColumnSet J1(2, 3, {2});
  CHECK(phi_restriction(MultiPoly::variable(vt23, vt23.alpha(2)), J1) ==
        MultiPoly::variable(vt23, vt23.alpha(2)));

  std::mt19937 rng(101);
  for (int round = 0; round < 15; ++round) {
    MultiPoly p = random_poly(vt23, rng, 4, 2);
    MultiPoly q = random_poly(vt23, rng, 4, 2);
    CHECK(phi_restriction(p * q, J) ==
          phi_restriction(p, J) * phi_restriction(q, J));
    CHECK(phi_restriction(p + q, J) ==
          phi_restriction(p, J) + phi_restriction(q, J));
  }

  // a foreign restriction drops below the top degree
  MultiPoly w12 = weight_function(ColumnSet(2, 3, {1, 2}));
  ColumnSet target(2, 3, {2, 3});
  CHECK(phi_restriction(w12, target).degree() < 2 * 3 - 2);
}
