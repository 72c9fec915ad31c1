#include "ssmkit/a2pp.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "ssmkit/weightfn.hpp"

namespace ssmkit {

namespace {

void check_dims(int r, int k, int n, int cap, const char* who) {
  if (k < 0 || n < k) throw arg_error(std::string(who) + ": need 0 <= k <= n");
  if (r < 0 || r > k) throw arg_error(std::string(who) + ": need 0 <= r <= k");
  if (cap < 0) throw arg_error(std::string(who) + ": negative cap");
}

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

}  // namespace

SigmaClass ssm_sigma_tssm(int k, int n, int r, int cap) {
  check_dims(r, k, n, cap, "ssm_sigma_tssm");
  const int l = n - k;
  SigmaClass out;
  out.k = k;
  out.n = n;
  out.r = r;
  out.cap = cap;
  out.schur = SchurSeries(cap);
  for (const Partition& lam : partitions_up_to_weight(cap)) {
    if (r > 0 && lam.part(r) < r + l) continue;
    if (lam.part(r + 1) > r + l) continue;
    out.schur += tssm(lam, cap).series;
  }
  out.value = apply_rho(out.schur, cell_table(k, n), cap);
  return out;
}

Int d_determinant(const Partition& mu, const Partition& nu, int s, int l) {
  if (s < 0) throw arg_error("d_determinant: negative size");
  if (mu.length() > s || nu.length() > s)
    throw arg_error("d_determinant: partition longer than s");
  if (s == 0) return 1;
  std::vector<std::vector<Int>> m(s, std::vector<Int>(s));
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j) {
      long bottom = mu.part(i) + s - i;
      long top = bottom + nu.part(j) + (s + l) - j;
      m[i - 1][j - 1] = binomial(top, bottom);
    }
  Int det = 0;
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        if (perm[i] > perm[j]) ++inv;
    Int prod = inv % 2 ? -1 : 1;
    for (int i = 0; i < s; ++i) prod *= m[i][perm[i]];
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

namespace {

SchurSeries phi_schur_sss(int s, int l, int cap) {
  const int hard = cap + s + 8;
  VarTable zt;
  zt.nz = hard;
  if (zt.nz > kMaxVars)
    throw arg_error("phi_class: cap too large for the variable table");
  zt.validate();

  MultiPoly G = MultiPoly::constant(zt, 1);
  for (int i = 1; i <= s; ++i) {
    G = mul(G, zpow(zt, zt.zvar(i), s + l), cap);
    for (int rep = 0; rep < s + l; ++rep)
      G = series_div_unit(G, lin(zt, 1, zt.zvar(i), -1), cap);
  }

  SchurSeries prev(cap);
  bool have_prev = false, fixed = false;
  for (int N = s; N <= hard; ++N) {
    if (N > s) {
      for (int i = 1; i <= s; ++i)
        G = mul(G, lin(zt, 1, zt.zvar(i), zt.zvar(N)), cap);
      for (int i = 1; i <= s; ++i)
        G = series_div_unit(G, lin(zt, 1, zt.zvar(i), -1), cap);
    }
    SchurSeries cur = schur_series_from_zpoly(G, cap);
    if (have_prev && cur == prev) {
      if (fixed) return cur;
      fixed = true;
    } else {
      fixed = false;
    }
    prev = std::move(cur);
    have_prev = true;
  }
  throw math_error("phi_class: no stable truncation before N=" +
                   std::to_string(hard));
}

SchurSeries phi_schur_det(int s, int l, int cap) {
  SchurSeries out(cap);
  const int base = s * (s + l);
  for (const Partition& mu : partitions_up_to_weight(cap - base, s)) {
    int rem = cap - base - mu.weight();
    for (const Partition& nu : partitions_up_to_weight(rem, s)) {
      Int d = d_determinant(mu, nu, s, l);
      if (d == 0) continue;
      IntVec v;
      for (int i = 1; i <= s; ++i) v.push_back(s + l + mu.part(i));
      Partition nt = nu.transpose();
      for (int p : nt.parts) v.push_back(p);
      Rat c(d);
      if ((mu.weight() + nu.weight()) % 2) c = -c;
      out.add(v, c);
    }
  }
  return out;
}

TruncatedSeries phi_value_loc(int s, int k, int n, int cap) {
  const VarTable vt = cell_table(k, n);
  const int capV = cap + k * (k - 1) / 2;
  MultiPoly total = MultiPoly::zero(vt);

  std::vector<int> pick(s);
  std::iota(pick.begin(), pick.end(), 1);  // current subset, 1-based rows
  for (;;) {
    std::vector<bool> in(k + 1, false);
    for (int u : pick) in[u] = true;

    MultiPoly A = MultiPoly::constant(vt, 1);
    for (int u : pick)
      for (int v = 1; v <= n; ++v)
        A = mul(A, lin(vt, 0, vt.beta(v), vt.alpha(u)), capV);
    for (int u : pick)
      for (int v = 1; v <= n; ++v)
        A = series_div_unit(A, lin(vt, 1, vt.beta(v), vt.alpha(u)), capV);
    for (int u : pick)
      for (int w = 1; w <= k; ++w)
        if (!in[w]) A = mul(A, lin(vt, 1, vt.alpha(w), vt.alpha(u)), capV);

    int crossings = 0;
    MultiPoly E = MultiPoly::constant(vt, 1);
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) {
        if (in[a] != in[b])
          crossings += in[a];  // counts pairs u in I, w out, u < w
        else
          E = E * lin(vt, 0, vt.alpha(a), vt.alpha(b));
      }
    A = mul(A, E, capV);
    if (crossings % 2) A.negate();
    total += A;

    // next s-combination of {1..k}
    int i = s - 1;
    while (i >= 0 && pick[i] == k - (s - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }

  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      total = divide_by_linear(total, lin(vt, 0, vt.alpha(a), vt.alpha(b)));
  return TruncatedSeries(std::move(total), cap);
}

}  // namespace

PhiClass phi_class(int s, int k, int n, int cap, PhiMethod method) {
  if (k < 1 || n < k) throw arg_error("phi_class: need 1 <= k <= n");
  if (s < 1 || s > k) throw arg_error("phi_class: need 1 <= s <= k");
  if (cap < 0) throw arg_error("phi_class: negative cap");
  PhiClass out;
  out.s = s;
  out.k = k;
  out.n = n;
  out.cap = cap;
  out.method = method;
  out.schur = SchurSeries(cap);
  const int l = n - k;
  switch (method) {
    case PhiMethod::SSS:
      out.schur = phi_schur_sss(s, l, cap);
      out.value = apply_rho(out.schur, cell_table(k, n), cap);
      break;
    case PhiMethod::Determinant:
      out.schur = phi_schur_det(s, l, cap);
      out.value = apply_rho(out.schur, cell_table(k, n), cap);
      break;
    case PhiMethod::Localization:
      out.value = phi_value_loc(s, k, n, cap);
      break;
  }
  return out;
}

TruncatedSeries ssm_sigma_sieve(int k, int n, int r, int cap) {
  check_dims(r, k, n, cap, "ssm_sigma_sieve");
  const VarTable vt = cell_table(k, n);
  MultiPoly acc = MultiPoly::zero(vt);
  for (int s = r; s <= k; ++s) {
    Rat c(binomial(s, r));
    if (c == 0) continue;
    if ((s - r) % 2) c = -c;
    MultiPoly phi = s == 0 ? MultiPoly::constant(vt, 1)
                           : phi_class(s, k, n, cap, PhiMethod::Determinant)
                                 .value.p;
    phi.scale(c);
    acc += phi;
  }
  return TruncatedSeries(std::move(acc), cap);
}

TruncatedSeries ssm_sigma_closure_sieve(int k, int n, int r, int cap) {
  check_dims(r, k, n, cap, "ssm_sigma_closure_sieve");
  const VarTable vt = cell_table(k, n);
  MultiPoly acc = MultiPoly::zero(vt);
  for (int s = r; s <= k; ++s) {
    Rat c = (s == 0 && r == 0) ? Rat(1) : Rat(binomial(s - 1, r - 1));
    if (c == 0) continue;
    if ((s - r) % 2) c = -c;
    MultiPoly phi = s == 0 ? MultiPoly::constant(vt, 1)
                           : phi_class(s, k, n, cap, PhiMethod::Determinant)
                                 .value.p;
    phi.scale(c);
    acc += phi;
  }
  return TruncatedSeries(std::move(acc), cap);
}

MultiPoly fundamental_class_sigma(int k, int n, int r) {
  check_dims(r, k, n, 0, "fundamental_class_sigma");
  const int l = n - k;
  IntVec rect(r, r + l);
  return schur_to_poly(Partition(rect), cell_table(k, n));
}

}  // namespace ssmkit
