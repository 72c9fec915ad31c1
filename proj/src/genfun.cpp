#include "ssmkit/genfun.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "ssmkit/weightfn.hpp"

namespace ssmkit {

namespace {

MultiPoly zpow(const VarTable& vt, int var, int e) {
  Mono m;
  m.set_exp(var, e);
  return MultiPoly::monomial(vt, m, 1);
}

MultiPoly lin(const VarTable& vt, int c, int plus, int minus) {
  MultiPoly p = MultiPoly::constant(vt, c);
  if (plus >= 0) p += MultiPoly::variable(vt, plus);
  if (minus >= 0) p -= MultiPoly::variable(vt, minus);
  return p;
}

IntVec padded(const IntVec& lam, int k, const char* who) {
  Partition p(lam);  // validates weakly decreasing nonnegative
  if (p.length() > k)
    throw arg_error(std::string(who) + ": partition longer than k");
  IntVec full(k, 0);
  for (int i = 0; i < p.length(); ++i) full[i] = p.part(i + 1);
  return full;
}

}  // namespace

RationalSeriesExpr fcsm_expr(const IntVec& lam, int k, int n) {
  if (k < 0 || n < 0) throw arg_error("fcsm_expr: bad dimensions");
  IntVec full = padded(lam, k, "fcsm_expr");
  VarTable zt;
  zt.nz = k;
  zt.validate();
  RationalSeriesExpr expr;
  expr.num = MultiPoly::constant(zt, 1);
  for (int i = 1; i <= k; ++i) {
    expr.num = expr.num * zpow(zt, zt.zvar(i), full[i - 1]);
    int e = std::max(0, n - k - 1 - full[i - 1] + i);
    expr.num = expr.num * pow(lin(zt, 1, zt.zvar(i), -1), e);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if (full[j - 1] - j <= n - k - 1)
        expr.num = expr.num * lin(zt, 1, zt.zvar(i), zt.zvar(j));
  return expr;
}

RationalSeriesExpr fssm_expr(const IntVec& lam, int k, int n) {
  if (k < 0) throw arg_error("fssm_expr: bad dimensions");
  VarTable zt;
  zt.nz = k;
  zt.validate();
  if (n == kInfiniteN) {
    IntVec full = padded(lam, k, "fssm_expr");
    RationalSeriesExpr expr;
    expr.num = MultiPoly::constant(zt, 1);
    for (int i = 1; i <= k; ++i)
      expr.num = expr.num * zpow(zt, zt.zvar(i), full[i - 1]);
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        expr.num = expr.num * lin(zt, 1, zt.zvar(i), zt.zvar(j));
    for (int i = 1; i <= k; ++i)
      expr.den.push_back({i, 1, full[i - 1] + (k - i + 1)});
    return expr;
  }
  if (n < 0) throw arg_error("fssm_expr: bad dimensions");
  IntVec full = padded(lam, k, "fssm_expr");
  RationalSeriesExpr expr = fcsm_expr(lam, k, n);
  // strip the (1+z_i)^{max(0,...)} numerator factors against the ambient
  // total Chern class (1+z_i)^n
  expr.num = MultiPoly::constant(zt, 1);
  for (int i = 1; i <= k; ++i)
    expr.num = expr.num * zpow(zt, zt.zvar(i), full[i - 1]);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if (full[j - 1] - j <= n - k - 1)
        expr.num = expr.num * lin(zt, 1, zt.zvar(i), zt.zvar(j));
  for (int i = 1; i <= k; ++i) {
    int p = n - std::max(0, n - k - 1 - full[i - 1] + i);
    if (p > 0) expr.den.push_back({i, 1, p});
  }
  return expr;
}

SchurSeries schur_via_genfun(const IntVec& lam, int k, int n, ClassKind kind,
                             int cap) {
  set_of_lambda(lam, k, n);  // compatibility gate (throws with the gap)
  RationalSeriesExpr expr =
      kind == ClassKind::CSM ? fcsm_expr(lam, k, n) : fssm_expr(lam, k, n);
  return sss_expand(expr, cap);
}

TruncatedSeries class_via_genfun(const IntVec& lam, int k, int n,
                                 ClassKind kind, int cap) {
  SchurSeries s = schur_via_genfun(lam, k, n, kind, cap);
  return apply_rho(s, alpha_table(k), cap);
}

// ---- tssm -----------------------------------------------------------------

namespace {

struct TssmCacheKey {
  IntVec lam;
  int cap;
  bool operator<(const TssmCacheKey& o) const {
    return lam != o.lam ? lam < o.lam : cap < o.cap;
  }
};

std::mutex tssm_mutex;
std::map<TssmCacheKey, TssmFunction> tssm_cache;

TssmFunction tssm_compute(const Partition& lam, int cap) {
  const int L = lam.length();
  const int hard = cap + L + 8;
  VarTable zt;
  zt.nz = hard;
  if (zt.nz > kMaxVars - 1)
    throw arg_error("tssm: cap too large for the variable table");
  zt.validate();

  MultiPoly G = MultiPoly::constant(zt, 1);
  for (int i = 1; i <= L; ++i) {
    G = mul(G, zpow(zt, zt.zvar(i), lam.part(i)), cap);
    for (int rep = 0; rep < lam.part(i); ++rep)
      G = series_div_unit(G, lin(zt, 1, zt.zvar(i), -1), cap);
  }

  SchurSeries prev(cap);
  bool have_prev = false, fixed = false;
  int fixN = 0;
  TssmFunction out;
  out.lambda = lam;
  out.cap = cap;
  for (int N = 1; N <= hard; ++N) {
    for (int i = 1; i < N; ++i)
      G = mul(G, lin(zt, 1, zt.zvar(i), zt.zvar(N)), cap);
    for (int i = 1; i <= N; ++i)
      G = series_div_unit(G, lin(zt, 1, zt.zvar(i), -1), cap);
    if (N < std::max(L, 1)) continue;
    SchurSeries cur = schur_series_from_zpoly(G, cap);
    if (have_prev && cur == prev) {
      if (fixed) {  // guard step confirmed
        out.series = cur;
        out.varsUsed = N;
        return out;
      }
      fixed = true;
      fixN = N;
    } else if (fixed) {
      fixed = false;  // guard step refuted the fixpoint; keep going
      (void)fixN;
    }
    prev = std::move(cur);
    have_prev = true;
  }
  throw math_error("tssm " + lam.str() + ": no stable truncation before N=" +
                   std::to_string(hard));
}

}  // namespace

TssmFunction tssm(const Partition& lam, int cap) {
  if (cap < 0) throw arg_error("tssm: negative cap");
  TssmCacheKey key{lam.parts, cap};
  {
    std::lock_guard<std::mutex> lock(tssm_mutex);
    auto it = tssm_cache.find(key);
    if (it != tssm_cache.end()) return it->second;
  }
  TssmFunction f = tssm_compute(lam, cap);
  std::lock_guard<std::mutex> lock(tssm_mutex);
  return tssm_cache.emplace(key, std::move(f)).first->second;
}

OrbitTssmExpansion ssm_orbit_tssm_expansion(const ColumnSet& I, int cap) {
  if (cap < 0) throw arg_error("ssm_orbit_tssm_expansion: negative cap");
  const int k = I.k, n = I.n, d = I.d();
  IntVec lam = lambda_of_set(I);
  OrbitTssmExpansion out;
  out.schur = SchurSeries(cap);
  long base = 0;
  for (int x : lam) base += x;
  if (base <= cap) {
    // raise the first k-d parts by a partition delta of length <= k-d
    for (const Partition& delta :
         partitions_up_to_weight(cap - (int)base, k - d)) {
      IntVec mu = lam;
      for (int a = 0; a < k - d; ++a) mu[a] += delta.part(a + 1);
      out.lambdas.push_back(Partition(mu));
    }
    std::sort(out.lambdas.begin(), out.lambdas.end(), PartLess{});
    for (const Partition& mu : out.lambdas) out.schur += tssm(mu, cap).series;
  }
  out.value = apply_rho(out.schur, alpha_table(k), cap);
  return out;
}

bool check_sum_to_one(int cap) {
  SchurSeries total(cap);
  for (const Partition& lam : partitions_up_to_weight(cap))
    total += tssm(lam, cap).series;
  SchurSeries one(cap);
  one.add(Partition{}, 1);
  return total == one;
}

AlternatingReport scan_alternating_signs(int maxWeight, int cap, int jobs) {
  if (maxWeight < 0 || cap < 0 || jobs < 1)
    throw arg_error("scan_alternating_signs: bad arguments");
  std::vector<Partition> lams = partitions_up_to_weight(maxWeight);
  AlternatingReport rep;
  rep.maxWeight = maxWeight;
  rep.cap = cap;
  rep.entries.resize(lams.size());

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= lams.size()) return;
      const Partition& lam = lams[i];
      TssmFunction f = tssm(lam, cap);
      AlternatingEntry e;
      e.lambda = lam;
      e.varsUsed = f.varsUsed;
      for (const auto& [mu, c] : f.series.terms) {
        int sgn = (mu.weight() - lam.weight()) % 2 == 0 ? 1 : -1;
        if (sgn * c < 0) {
          e.pass = false;
          e.violations.push_back({mu, c});
        }
      }
      rep.entries[i] = std::move(e);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : rep.entries)
    if (!e.pass) rep.pass = false;
  return rep;
}

bool raising_shift_check(const IntVec& lam, int k, int nStart, int steps) {
  IntVec full = padded(lam, k, "raising_shift_check");
  if (k < 1 || steps < 0 || nStart < k + (k ? full[0] : 0))
    throw arg_error("raising_shift_check: need n >= k + lambda_1");
  auto expand = [&](const IntVec& lv, int n) {
    RationalSeriesExpr expr = fcsm_expr(lv, k, n);
    int deg = std::max(0, expr.num.degree());
    return schur_series_from_zpoly(expr.num, deg);
  };
  SchurSeries base = expand(full, nStart);
  for (int t = 1; t <= steps; ++t) {
    IntVec shifted = full;
    for (int a = 0; a < k; ++a) shifted[a] += t;
    SchurSeries got = expand(shifted, nStart + t);
    SchurSeries want(got.cap);
    for (const auto& [mu, c] : base.terms) {
      IntVec v(k, t);
      for (int a = 0; a < std::min(k, mu.length()); ++a) v[a] += mu.part(a + 1);
      want.add(Partition(v), c);
    }
    if (!(got == want)) return false;
  }
  return true;
}

}  // namespace ssmkit
