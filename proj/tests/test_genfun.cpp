#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ssmkit/genfun.hpp"
#include "ssmkit/weightfn.hpp"
#include "test_util.hpp"

using namespace ssmkit;
using testutil::pconst;
using testutil::pvar;
using testutil::sser;
using testutil::weight_slice;

namespace {

VarTable z2_table() {
  VarTable vt;
  vt.nz = 2;
  vt.validate();
  return vt;
}

// Verifies expr == num / den exactly through the cap by multiplying back.
void check_slice(const RationalSeriesExpr& expr, const MultiPoly& num,
                 const MultiPoly& den, int cap) {
  MultiPoly e = expand_rational(expr, cap);
  CHECK(truncate(e * den, cap) == truncate(num, cap));
}

TruncatedSeries ssm_beta0_sliced(const ColumnSet& I, int cap) {
  const int codim = cell_geometry(I).codim();
  CsmClass c = ssm_cell_beta0(I, std::max(cap, codim));
  return TruncatedSeries(c.series.p, cap);
}

}  // namespace

TEST_CASE("ssm generating expressions at small and infinite column counts") {
  VarTable vt = z2_table();
  MultiPoly z1 = pvar(vt, vt.zvar(1)), z2 = pvar(vt, vt.zvar(2));
  MultiPoly one = pconst(vt, 1);
  MultiPoly head = z1 * (one + z1 - z2);

  // n = 0 collapses to the bare monomial
  RationalSeriesExpr f0 = fssm_expr({1, 0}, 2, 0);
  CHECK(f0.den.empty());
  CHECK(f0.num == z1);

  // n = 1, 2 and the stable form, pinned by multiply-back
  check_slice(fssm_expr({1, 0}, 2, 1), head, (one + z1) * (one + z2), 6);
  check_slice(fssm_expr({1, 0}, 2, 2), head,
              pow(one + z1, 2) * (one + z2), 6);
  check_slice(fssm_expr({1, 0}, 2, kInfiniteN), head,
              pow(one + z1, 3) * (one + z2), 6);

  // the expression freezes once the columns outnumber k + lambda_1
  MultiPoly stable = expand_rational(fssm_expr({1, 0}, 2, kInfiniteN), 6);
  CHECK(expand_rational(fssm_expr({1, 0}, 2, 3), 6) == stable);
  CHECK(expand_rational(fssm_expr({1, 0}, 2, 4), 6) == stable);
  CHECK(expand_rational(fssm_expr({1, 0}, 2, 2), 6) != stable);

  CHECK_THROWS_AS(fssm_expr({0, 1}, 2, 3), arg_error);     // not decreasing
  CHECK_THROWS_AS(fssm_expr({1, 1, 1}, 2, 3), arg_error);  // too long
}

TEST_CASE("csm generating expression matches the weight route") {
  // the two-column staircase cell: lambda = (1, 0) inside 2 x 3
  for (int n = 2; n <= 4; ++n) {
    IntVec lam = {1, 0};
    ColumnSet I = set_of_lambda(lam, 2, n);
    MultiPoly w0 = weight_function_beta0(I);
    TruncatedSeries got = class_via_genfun(lam, 2, n, ClassKind::CSM,
                                           2 * n /* >= deg */);
    CHECK(got.p == w0);
  }
}

TEST_CASE("pinned expansions of the (3,1) cells") {
  // four columns: the partition overflows the grid and drops a column
  SchurSeries csm4 = schur_via_genfun({3, 1}, 2, 4, ClassKind::CSM, 8);
  CHECK(csm4 == sser(8, {{{3, 1}, 1},
                         {{3, 2}, 1},
                         {{4, 1}, 1},
                         {{3, 3}, -1},
                         {{4, 2}, 2},
                         {{4, 3}, 1}}));

  SchurSeries ssm4 = schur_via_genfun({3, 1}, 2, 4, ClassKind::SSM, 7);
  CHECK(ssm4 == sser(7, {{{3, 1}, 1},
                         {{4, 1}, -3},
                         {{3, 2}, -3},
                         {{5, 1}, 6},
                         {{4, 2}, 10},
                         {{3, 3}, 5},
                         {{6, 1}, -10},
                         {{5, 2}, -22},
                         {{4, 3}, -17}}));

  // five columns: full rank
  SchurSeries csm5 = schur_via_genfun({3, 1}, 2, 5, ClassKind::CSM, 10);
  CHECK(csm5 == sser(10, {{{3, 1}, 1},
                          {{3, 2}, 2},
                          {{4, 1}, 1},
                          {{4, 2}, 3},
                          {{4, 3}, 3},
                          {{4, 4}, 2}}));

  SchurSeries ssm5 = schur_via_genfun({3, 1}, 2, 5, ClassKind::SSM, 7);
  CHECK(ssm5 == sser(7, {{{3, 1}, 1},
                         {{3, 2}, -3},
                         {{4, 1}, -4},
                         {{3, 3}, 5},
                         {{4, 2}, 13},
                         {{5, 1}, 10},
                         {{4, 3}, -22},
                         {{5, 2}, -35},
                         {{6, 1}, -20}}));

  // the ssm expansion is already stable at five columns
  CHECK(schur_via_genfun({3, 1}, 2, 6, ClassKind::SSM, 7) ==
        schur_via_genfun({3, 1}, 2, 5, ClassKind::SSM, 7));

  // both kinds evaluate to the classes computed through the weight route
  for (int n = 4; n <= 5; ++n) {
    ColumnSet I = set_of_lambda({3, 1}, 2, n);
    TruncatedSeries csm = class_via_genfun({3, 1}, 2, n, ClassKind::CSM, 12);
    CHECK(csm.p == weight_function_beta0(I));
    TruncatedSeries ssm = class_via_genfun({3, 1}, 2, n, ClassKind::SSM, 7);
    CHECK(ssm == ssm_beta0_sliced(I, 7));
  }

  CHECK_THROWS_AS(class_via_genfun({3, 1}, 2, 3, ClassKind::CSM, 8),
                  arg_error);  // incompatible column count
}

TEST_CASE("stable building blocks reproduce the pinned tables") {
  TssmFunction t0 = tssm(Partition(), 4);
  CHECK(t0.series == sser(4, {{{}, 1},
                              {{1}, -1},
                              {{2}, 1},
                              {{1, 1}, 1},
                              {{3}, -1},
                              {{2, 1}, -2},
                              {{1, 1, 1}, -1},
                              {{4}, 1},
                              {{3, 1}, 3},
                              {{2, 2}, 1},
                              {{2, 1, 1}, 3},
                              {{1, 1, 1, 1}, 1}}));

  TssmFunction t1 = tssm(Partition({1}), 4);
  CHECK(t1.series == sser(4, {{{1}, 1},
                              {{2}, -2},
                              {{1, 1}, -2},
                              {{3}, 3},
                              {{2, 1}, 5},
                              {{1, 1, 1}, 3},
                              {{4}, -4},
                              {{3, 1}, -9},
                              {{2, 2}, -3},
                              {{2, 1, 1}, -9},
                              {{1, 1, 1, 1}, -4}}));

  TssmFunction t11 = tssm(Partition({1, 1}), 4);
  CHECK(t11.series == sser(4, {{{1, 1}, 1},
                               {{2, 1}, -2},
                               {{1, 1, 1}, -3},
                               {{3, 1}, 3},
                               {{2, 2}, 2},
                               {{2, 1, 1}, 7},
                               {{1, 1, 1, 1}, 6}}));

  TssmFunction t31 = tssm(Partition({3, 1}), 7);
  auto got = weight_slice(t31.series, 7);
  auto want = weight_slice(sser(7, {{{3, 1}, 1},
                                    {{4, 1}, -4},
                                    {{3, 2}, -3},
                                    {{3, 1, 1}, -3},
                                    {{5, 1}, 10},
                                    {{4, 2}, 13},
                                    {{3, 3}, 5},
                                    {{3, 2, 1}, 10},
                                    {{3, 1, 1, 1}, 6},
                                    {{4, 1, 1}, 13},
                                    {{6, 1}, -20},
                                    {{5, 2}, -35},
                                    {{4, 3}, -22},
                                    {{5, 1, 1}, -35},
                                    {{4, 2, 1}, -46},
                                    {{3, 3, 1}, -19},
                                    {{3, 2, 2}, -10},
                                    {{4, 1, 1, 1}, -28},
                                    {{3, 2, 1, 1}, -22},
                                    {{3, 1, 1, 1, 1}, -10}}),
                           7);
  CHECK(got == want);
}

TEST_CASE("building blocks are lower-triangular with unit diagonal") {
  for (const Partition& lam : partitions_up_to_weight(4)) {
    TssmFunction t = tssm(lam, 6);
    CHECK(t.varsUsed >= std::max(lam.length(), 1));
    CHECK(t.series.coeff(lam) == Rat(1));
    for (const auto& [mu, c] : t.series.terms) {
      CHECK(mu.weight() >= lam.weight());
      if (mu.weight() == lam.weight()) CHECK(mu == lam);
      CHECK(mu.contains(lam));
    }
  }
  // repeated evaluation is stable (cached and deterministic)
  CHECK(tssm(Partition({2, 1}), 5).series == tssm(Partition({2, 1}), 5).series);
}

TEST_CASE("building blocks sum to the unit series") {
  CHECK(check_sum_to_one(0));
  CHECK(check_sum_to_one(3));
  CHECK(check_sum_to_one(5));
}

TEST_CASE("orbit expansions over the raised-partition family") {
  // full-rank cell: a single frozen partition
  OrbitTssmExpansion full = ssm_orbit_tssm_expansion(ColumnSet(2, 5, {2, 5}), 6);
  REQUIRE(full.lambdas.size() == 1);
  CHECK(full.lambdas[0] == Partition({3, 1}));
  CHECK(full.schur == tssm(Partition({3, 1}), 6).series);
  CHECK(full.value == ssm_beta0_sliced(ColumnSet(2, 5, {2, 5}), 6));

  // rank-deficient cell: the first row of the partition floats upward
  OrbitTssmExpansion def = ssm_orbit_tssm_expansion(ColumnSet(2, 4, {2}), 7);
  std::vector<Partition> expect = {Partition({3, 1}), Partition({4, 1}),
                                   Partition({5, 1}), Partition({6, 1})};
  CHECK(def.lambdas == expect);
  CHECK(def.value == ssm_beta0_sliced(ColumnSet(2, 4, {2}), 7));

  // the zero orbit of a one-row space: every column partition contributes
  OrbitTssmExpansion zero = ssm_orbit_tssm_expansion(ColumnSet(1, 2, {}), 5);
  REQUIRE(zero.lambdas.size() == 4);  // (2), (3), (4), (5)
  CHECK(zero.lambdas[0] == Partition({2}));
  CHECK(zero.lambdas[3] == Partition({5}));
  CHECK(zero.value == ssm_beta0_sliced(ColumnSet(1, 2, {}), 5));
}

TEST_CASE("sign-alternation scan on small partitions") {
  AlternatingReport rep = scan_alternating_signs(3, 6, 1);
  CHECK(rep.pass);
  CHECK(rep.maxWeight == 3);
  CHECK(rep.cap == 6);
  std::size_t count = partitions_up_to_weight(3).size();
  REQUIRE(rep.entries.size() == count);
  for (const auto& e : rep.entries) {
    CHECK(e.pass);
    CHECK(e.violations.empty());
  }

  // worker count must not affect the report
  AlternatingReport rep2 = scan_alternating_signs(3, 6, 2);
  REQUIRE(rep2.entries.size() == rep.entries.size());
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    CHECK(rep2.entries[i].lambda == rep.entries[i].lambda);
    CHECK(rep2.entries[i].pass == rep.entries[i].pass);
    CHECK(rep2.entries[i].varsUsed == rep.entries[i].varsUsed);
  }
}

TEST_CASE("row-and-column raising shifts every index by one box per row") {
  CHECK(raising_shift_check({3, 1}, 2, 5, 2));
  CHECK(raising_shift_check({0}, 1, 2, 3));
  CHECK_THROWS_AS(raising_shift_check({3, 1}, 2, 4, 1), arg_error);

  // the three pinned shifted expansions
  SchurSeries base = schur_via_genfun({3, 1}, 2, 5, ClassKind::CSM, 8);
  CHECK(base == sser(8, {{{3, 1}, 1},
                         {{3, 2}, 2},
                         {{4, 1}, 1},
                         {{4, 2}, 3},
                         {{4, 3}, 3},
                         {{4, 4}, 2}}));
  SchurSeries up1 = schur_via_genfun({4, 2}, 2, 6, ClassKind::CSM, 10);
  CHECK(up1 == sser(10, {{{4, 2}, 1},
                         {{4, 3}, 2},
                         {{5, 2}, 1},
                         {{5, 3}, 3},
                         {{5, 4}, 3},
                         {{5, 5}, 2}}));
  SchurSeries up2 = schur_via_genfun({5, 3}, 2, 7, ClassKind::CSM, 12);
  CHECK(up2 == sser(12, {{{5, 3}, 1},
                         {{5, 4}, 2},
                         {{6, 3}, 1},
                         {{6, 4}, 3},
                         {{6, 5}, 3},
                         {{6, 6}, 2}}));
}
