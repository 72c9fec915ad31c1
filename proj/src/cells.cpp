#include "ssmkit/cells.hpp"

#include <algorithm>

#include "ssmkit/rational.hpp"

namespace ssmkit {

ColumnSet::ColumnSet(int k_, int n_, std::vector<int> cols_)
    : k(k_), n(n_), cols(std::move(cols_)) {
  if (k < 0 || n < 0 || k > n)
    throw arg_error("ColumnSet: need 0 <= k <= n, got k=" + std::to_string(k) +
                    ", n=" + std::to_string(n));
  if ((int)cols.size() > k)
    throw arg_error("ColumnSet: size " + std::to_string(cols.size()) +
                    " exceeds k=" + std::to_string(k));
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 1 || cols[i] > n)
      throw arg_error("ColumnSet: element " + std::to_string(cols[i]) +
                      " outside {1.." + std::to_string(n) + "}");
    if (i > 0 && cols[i] <= cols[i - 1])
      throw arg_error("ColumnSet: elements must be strictly increasing");
  }
}

std::string ColumnSet::str() const {
  std::string s = "{";
  for (size_t i = 0; i < cols.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cols[i]);
  }
  return s + "}";
}

std::vector<ColumnSet> enumerate_orbits(int k, int n) {
  if (k < 0 || n < 0 || k > n)
    throw arg_error("enumerate_orbits: need 0 <= k <= n");
  std::vector<ColumnSet> out;
  for (int d = k; d >= 0; --d) {
    // lexicographic d-subsets of {1..n}
    std::vector<int> c(d);
    for (int i = 0; i < d; ++i) c[i] = i + 1;
    while (true) {
      out.emplace_back(k, n, c);
      if (d == 0) break;
      int i = d - 1;
      while (i >= 0 && c[i] == n - (d - 1 - i)) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

IntVec lambda_of_set(const ColumnSet& I) {
  const int k = I.k, n = I.n, d = I.d();
  IntVec lam(k, 0);
  for (int a = 1; a <= k; ++a) {
    // i_{k+1-a}, padded by i_{d+t} = n+t
    int idx = k + 1 - a;
    int iv = idx <= d ? I.cols[idx - 1] : n + (idx - d);
    lam[a - 1] = iv - idx;
  }
  return lam;
}

ColumnSet set_of_lambda(const IntVec& lam, int k, int n) {
  Partition p(lam);  // validates weakly decreasing, nonnegative
  if ((int)lam.size() > k && p.length() > k)
    throw arg_error("set_of_lambda: lambda longer than k");
  std::vector<int> full(k);
  for (int a = 1; a <= k; ++a) {
    int lv = a <= (int)lam.size() ? lam[a - 1] : 0;
    full[a - 1] = lv;  // already checked decreasing via Partition
  }
  std::vector<int> iv(k);
  for (int a = 1; a <= k; ++a) iv[a - 1] = full[k - a] + a;  // i_a
  std::vector<int> cols;
  for (int a = 0; a < k; ++a)
    if (iv[a] <= n) cols.push_back(iv[a]);
  // the entries beyond n must be exactly n+1, n+2, ..., n+q
  int expect = n + 1;
  for (int a = 0; a < k; ++a) {
    if (iv[a] <= n) continue;
    if (iv[a] != expect)
      throw arg_error("set_of_lambda: lambda incompatible with n=" +
                      std::to_string(n) + ": index " + std::to_string(iv[a]) +
                      " leaves the gap at " + std::to_string(expect));
    ++expect;
  }
  return ColumnSet(k, n, std::move(cols));
}

namespace {
void sort_pos(PosSet& s) { std::sort(s.begin(), s.end()); }
}  // namespace

CellGeometry cell_geometry(const ColumnSet& I) {
  const int k = I.k, n = I.n, d = I.d();
  CellGeometry g;
  g.I = I;
  std::vector<std::vector<bool>> inT(n + 1, std::vector<bool>(k + 1, false));
  for (int u = 1; u <= k; ++u) {
    for (int v = 1; v <= n; ++v) {
      MatrixPos p{v, u};
      bool a0 = u <= d && v == I.cols[u - 1];
      bool a1 = u <= d && v < I.cols[u - 1];
      bool a2 = u <= d && v > I.cols[u - 1];
      bool a3 = u > d;
      bool a4 = false;
      for (int w = 1; w <= d && !a4; ++w)
        if (v == I.cols[w - 1] && u > w) a4 = true;
      if (a0) g.A0.push_back(p);
      if (a1) g.A1.push_back(p);
      if (a2) g.A2.push_back(p);
      if (a3) g.A3.push_back(p);
      if (a4) g.A4.push_back(p);
      if (a0 || a2 || a4) {
        g.T.push_back(p);
        inT[v][u] = true;
      }
    }
  }
  for (int v = 1; v <= n; ++v)
    for (int u = 1; u <= k; ++u)
      if (!inT[v][u]) g.N.push_back({v, u});
  sort_pos(g.A0);
  sort_pos(g.A1);
  sort_pos(g.A2);
  sort_pos(g.A3);
  sort_pos(g.A4);
  sort_pos(g.T);
  sort_pos(g.N);
  g.representative.assign(n, std::vector<int>(k, 0));
  for (int u = 1; u <= d; ++u) g.representative[I.cols[u - 1] - 1][u - 1] = 1;
  return g;
}

bool closure_leq(const ColumnSet& J, const ColumnSet& I) {
  if (J.k != I.k || J.n != I.n)
    throw arg_error("closure_leq: dimension mismatch");
  int cj = 0, ci = 0;
  size_t pj = 0, pi = 0;
  for (int r = 1; r <= J.n; ++r) {
    if (pj < J.cols.size() && J.cols[pj] == r) ++cj, ++pj;
    if (pi < I.cols.size() && I.cols[pi] == r) ++ci, ++pi;
    if (cj > ci) return false;
  }
  return true;
}

std::vector<int> phi_restriction_map(const ColumnSet& J, const VarTable& vt) {
  if (vt.na < J.k || vt.nb < J.n)
    throw arg_error("phi_restriction_map: table too small for (k,n)");
  std::vector<int> map(vt.total());
  for (int i = 0; i < vt.total(); ++i) map[i] = i;
  for (int u = 1; u <= J.d(); ++u) map[vt.alpha(u)] = vt.beta(J.cols[u - 1]);
  return map;
}

MultiPoly phi_restriction(const MultiPoly& p, const ColumnSet& J) {
  return rename_vars(p, p.vt, phi_restriction_map(J, p.vt));
}

}  // namespace ssmkit
