#include "ssmkit/weightfn.hpp"

#include <algorithm>

namespace ssmkit {

VarTable cell_table(int k, int n) {
  VarTable vt;
  vt.na = k;
  vt.nb = n;
  vt.validate();
  return vt;
}

VarTable alpha_table(int k) {
  VarTable vt;
  vt.na = k;
  vt.validate();
  return vt;
}

namespace {

MultiPoly zpow(const VarTable& vt, int var, int e) {
  Mono m;
  m.set_exp(var, e);
  return MultiPoly::monomial(vt, m, 1);
}

// c + x_plus - x_minus (indices < 0 mean the variable is absent)
MultiPoly lin(const VarTable& vt, int c, int plus, int minus) {
  MultiPoly p = MultiPoly::constant(vt, c);
  if (plus >= 0) p += MultiPoly::variable(vt, plus);
  if (minus >= 0) p -= MultiPoly::variable(vt, minus);
  return p;
}

}  // namespace

MultiPoly weight_numerator(const ColumnSet& I, const VarTable& vt) {
  const int k = I.k, n = I.n, d = I.d();
  if (vt.na < k || vt.nb < n)
    throw arg_error("weight_numerator: table too small");
  MultiPoly acc = MultiPoly::constant(vt, 1);
  for (int u = 1; u <= d; ++u) {
    const int iu = I.cols[u - 1];
    for (int v = iu + 1; v <= n; ++v)
      acc = acc * lin(vt, 1, vt.beta(v), vt.alpha(u));
    for (int v = 1; v <= iu - 1; ++v)
      acc = acc * lin(vt, 0, vt.beta(v), vt.alpha(u));
    for (int v = u + 1; v <= k; ++v)
      acc = acc * lin(vt, 1, vt.alpha(u), vt.alpha(v));
  }
  for (int u = d + 1; u <= k; ++u)
    for (int v = 1; v <= n; ++v)
      acc = acc * lin(vt, 0, vt.beta(v), vt.alpha(u));
  return acc;
}

MultiPoly weight_function(const ColumnSet& I) {
  const int k = I.k, n = I.n, d = I.d();
  VarTable vt = cell_table(k, n);
  MultiPoly num = weight_numerator(I, vt);
  std::vector<std::pair<int, int>> dens;
  for (int u = 1; u <= d; ++u)
    for (int v = u + 1; v <= k; ++v) dens.push_back({vt.alpha(u), vt.alpha(v)});
  std::vector<int> block;
  for (int u = 1; u <= k; ++u) block.push_back(vt.alpha(u));
  MultiPoly W =
      symmetrize_over_block(num, dens, block, Rat(factorial(k - d)));
  if (W.degree() != n * k - d)
    throw math_error("weight_function " + I.str() + ": degree " +
                     std::to_string(W.degree()) + " != " +
                     std::to_string(n * k - d));
  for (const auto& t : W.terms)
    if (!is_integer(t.c))
      throw math_error("weight_function " + I.str() +
                       ": non-integer coefficient " + rat_str(t.c));
  return W;
}

MultiPoly weight_function_beta0(const ColumnSet& I) {
  VarTable vt = cell_table(I.k, I.n);
  VarTable at = alpha_table(I.k);
  std::vector<int> to(vt.total(), kMapZero);
  for (int u = 1; u <= I.k; ++u) to[vt.alpha(u)] = at.alpha(u);
  return rename_vars(weight_function(I), at, to);
}

MultiPoly weight_function_residue_beta0(const ColumnSet& I) {
  const int k = I.k, n = I.n, d = I.d(), r = k - d;
  VarTable zt;
  zt.nz = k;
  zt.validate();
  MultiPoly f = MultiPoly::constant(zt, 1);
  for (int a = 1; a <= r; ++a)
    f = f * zpow(zt, zt.zvar(a), n + r - a);
  for (int a = r + 1; a <= k; ++a) {
    const int ia = I.cols[k - a];  // i_{k+1-a}, and k+1-a <= d here
    f = f * zpow(zt, zt.zvar(a), ia - 1);
    f = f * pow(lin(zt, 1, zt.zvar(a), -1), n - ia);
  }
  for (int a = r + 1; a <= k; ++a)
    for (int b = 1; b < a; ++b) f = f * lin(zt, 1, zt.zvar(b), zt.zvar(a));
  for (int b = 1; b <= k; ++b)
    for (int a = b + 1; a <= k; ++a) f = f * lin(zt, 0, zt.zvar(a), zt.zvar(b));

  VarTable at = alpha_table(k);
  const int D = n * k + 2 * k + 2;
  std::vector<MultiPoly> cs = chern_coefficients(at, D);
  MultiPoly W = MultiPoly::zero(at);
  for (const auto& t : f.terms) {
    bool dead = false;
    std::array<int, kMaxVars> idx{};
    for (int a = 1; a <= k && !dead; ++a) {
      idx[a] = t.m.exp(zt.zvar(a)) - (k - 1);
      if (idx[a] < 0) dead = true;
    }
    if (dead) continue;
    MultiPoly prod = MultiPoly::constant(at, 1);
    prod.scale(t.c);
    for (int a = 1; a <= k; ++a)
      if (idx[a] > 0) prod = prod * cs[idx[a]];
    W += prod;
  }
  return W;
}

CsmClass csm_cell(const ColumnSet& I) {
  CsmClass c;
  c.kind = CsmClass::Kind::CSM;
  c.k = I.k;
  c.n = I.n;
  c.poly = weight_function(I);
  return c;
}

CsmClass ssm_cell(const ColumnSet& I, int cap) {
  const int codim = I.n * I.k - cell_geometry(I).dim();
  if (cap < codim)
    throw arg_error("ssm_cell " + I.str() + ": cap " + std::to_string(cap) +
                    " below codimension " + std::to_string(codim));
  VarTable vt = cell_table(I.k, I.n);
  MultiPoly s = truncate(weight_function(I), cap);
  for (int u = 1; u <= I.k; ++u)
    for (int v = 1; v <= I.n; ++v)
      s = series_div_unit(s, lin(vt, 1, vt.beta(v), vt.alpha(u)), cap);
  CsmClass c;
  c.kind = CsmClass::Kind::SSM;
  c.k = I.k;
  c.n = I.n;
  c.series = TruncatedSeries(std::move(s), cap);
  return c;
}

CsmClass csm_cell_beta0(const ColumnSet& I) {
  CsmClass c;
  c.kind = CsmClass::Kind::CSM;
  c.k = I.k;
  c.n = I.n;
  c.beta0 = true;
  c.poly = weight_function_beta0(I);
  return c;
}

CsmClass ssm_cell_beta0(const ColumnSet& I, int cap) {
  const int codim = I.n * I.k - cell_geometry(I).dim();
  if (cap < codim)
    throw arg_error("ssm_cell_beta0 " + I.str() + ": cap " +
                    std::to_string(cap) + " below codimension " +
                    std::to_string(codim));
  VarTable at = alpha_table(I.k);
  MultiPoly s = truncate(weight_function_beta0(I), cap);
  for (int u = 1; u <= I.k; ++u) {
    MultiPoly unit = lin(at, 1, -1, at.alpha(u));  // 1 - a_u
    for (int rep = 0; rep < I.n; ++rep) s = series_div_unit(s, unit, cap);
  }
  CsmClass c;
  c.kind = CsmClass::Kind::SSM;
  c.k = I.k;
  c.n = I.n;
  c.beta0 = true;
  c.series = TruncatedSeries(std::move(s), cap);
  return c;
}

// ---- interpolation axioms -------------------------------------------------

MultiPoly tangent_chern_restricted(const CellGeometry& g, const VarTable& vt) {
  const int d = g.I.d();
  MultiPoly acc = MultiPoly::constant(vt, 1);
  for (const auto& p : g.T) {
    int minus = p.u <= d ? vt.beta(g.I.cols[p.u - 1]) : vt.alpha(p.u);
    acc = acc * lin(vt, 1, vt.beta(p.v), minus);
  }
  return acc;
}

MultiPoly normal_euler_restricted(const CellGeometry& g, const VarTable& vt) {
  const int d = g.I.d();
  MultiPoly acc = MultiPoly::constant(vt, 1);
  for (const auto& p : g.N) {
    int minus = p.u <= d ? vt.beta(g.I.cols[p.u - 1]) : vt.alpha(p.u);
    acc = acc * lin(vt, 0, vt.beta(p.v), minus);
  }
  return acc;
}

std::vector<const AxiomCheck*> AxiomReport::failures() const {
  std::vector<const AxiomCheck*> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(&c);
  return out;
}

std::string AxiomReport::summary() const {
  std::string s = pass ? "all interpolation axioms hold" : "FAIL:";
  if (!pass) {
    for (const auto* c : failures()) {
      s += "\n  axiom (" + std::to_string(c->axiom) + ") omega=" +
           c->omega.str() + " theta=" + c->theta.str() + ": " + c->witness;
    }
  }
  return s;
}

AxiomReport verify_interpolation_axioms(const OrbitClassList& classes, int k,
                                        int n) {
  const std::vector<ColumnSet> orbits = enumerate_orbits(k, n);
  VarTable vt = cell_table(k, n);
  std::vector<const MultiPoly*> cls(orbits.size(), nullptr);
  for (size_t i = 0; i < orbits.size(); ++i) {
    for (const auto& [I, p] : classes)
      if (I == orbits[i]) {
        cls[i] = &p;
        break;
      }
    if (!cls[i])
      throw arg_error("verify_interpolation_axioms: missing class for orbit " +
                      orbits[i].str());
  }

  struct ThetaData {
    CellGeometry g;
    MultiPoly cT, eN;
    std::vector<std::pair<MultiPoly, int>> factors;  // non-unit, multiplicity
  };
  std::vector<ThetaData> td;
  td.reserve(orbits.size());
  for (const auto& Th : orbits) {
    ThetaData t{cell_geometry(Th), MultiPoly::constant(vt, 1),
                MultiPoly::constant(vt, 1), {}};
    t.cT = tangent_chern_restricted(t.g, vt);
    t.eN = normal_euler_restricted(t.g, vt);
    const MultiPoly one = MultiPoly::constant(vt, 1);
    const int d = Th.d();
    for (const auto& p : t.g.T) {
      int minus = p.u <= d ? vt.beta(Th.cols[p.u - 1]) : vt.alpha(p.u);
      MultiPoly f = lin(vt, 1, vt.beta(p.v), minus);
      if (f == one) continue;  // positions in A0 restrict to the unit
      bool found = false;
      for (auto& [g, m] : t.factors)
        if (g == f) {
          ++m;
          found = true;
          break;
        }
      if (!found) t.factors.push_back({f, 1});
    }
    td.push_back(std::move(t));
  }

  AxiomReport rep;
  for (size_t io = 0; io < orbits.size(); ++io) {
    for (size_t it = 0; it < orbits.size(); ++it) {
      const ColumnSet &Om = orbits[io], &Th = orbits[it];
      MultiPoly rest = phi_restriction(*cls[io], Th);
      if (io == it) {
        AxiomCheck c{Om, Th, 1, true, ""};
        MultiPoly want = td[it].cT * td[it].eN;
        if (!(rest == want)) {
          c.pass = false;
          c.witness = "restriction - c(T)e(N) = " + to_text(rest - want);
        }
        rep.checks.push_back(std::move(c));
      }
      {
        AxiomCheck c{Om, Th, 2, true, ""};
        MultiPoly q = rest;
        for (const auto& [f, m] : td[it].factors) {
          bool ok = true;
          for (int rep2 = 0; rep2 < m && ok; ++rep2) {
            auto quo = try_divide_linear(q, f);
            if (quo)
              q = std::move(*quo);
            else
              ok = false;
          }
          if (!ok) {
            c.pass = false;
            c.witness = "factor " + to_text(f) + " of c(T) does not divide";
            break;
          }
        }
        rep.checks.push_back(std::move(c));
      }
      if (io != it) {
        AxiomCheck c{Om, Th, 3, true, ""};
        const int bound = n * k - Th.d();
        if (!(rest.degree() < bound)) {
          c.pass = false;
          c.witness = "degree " + std::to_string(rest.degree()) +
                      " not below " + std::to_string(bound);
        }
        rep.checks.push_back(std::move(c));
      }
      if (!closure_leq(Th, Om)) {
        AxiomCheck c{Om, Th, 4, true, ""};
        if (!rest.is_zero()) {
          c.pass = false;
          c.witness = "nonzero restriction outside closure: " + to_text(rest);
        }
        rep.checks.push_back(std::move(c));
      }
    }
  }
  rep.pass = rep.failures().empty();
  return rep;
}

// ---- coordinate arrangements ---------------------------------------------

namespace {
void region_compat(const CoordRegion& a, const CoordRegion& b) {
  if (a.nvars != b.nvars)
    throw arg_error("CoordRegion: mixing regions of different ambient spaces");
}
}  // namespace

CoordRegion CoordRegion::whole(int nvars) {
  if (nvars < 0 || nvars > 63) throw arg_error("CoordRegion: bad nvars");
  CoordRegion r;
  r.nvars = nvars;
  r.parts[0] = 1;
  return r;
}

CoordRegion CoordRegion::subspace(int nvars, const std::vector<int>& zeros) {
  if (nvars < 0 || nvars > 63) throw arg_error("CoordRegion: bad nvars");
  std::uint64_t mask = 0;
  for (int z : zeros) {
    if (z < 1 || z > nvars)
      throw arg_error("CoordRegion: coordinate " + std::to_string(z) +
                      " outside 1.." + std::to_string(nvars));
    std::uint64_t bit = std::uint64_t(1) << (z - 1);
    if (mask & bit) throw arg_error("CoordRegion: repeated coordinate");
    mask |= bit;
  }
  CoordRegion r;
  r.nvars = nvars;
  r.parts[mask] = 1;
  return r;
}

CoordRegion CoordRegion::intersect(const CoordRegion& o) const {
  region_compat(*this, o);
  CoordRegion r;
  r.nvars = nvars;
  for (const auto& [ma, ca] : parts)
    for (const auto& [mb, cb] : o.parts) {
      long& slot = r.parts[ma | mb];
      slot += ca * cb;
      if (slot == 0) r.parts.erase(ma | mb);
    }
  return r;
}

CoordRegion CoordRegion::unite(const CoordRegion& o) const {
  region_compat(*this, o);
  CoordRegion both = intersect(o);
  CoordRegion r;
  r.nvars = nvars;
  auto acc = [&r](const std::map<std::uint64_t, long>& m, long sgn) {
    for (const auto& [mask, c] : m) {
      long& slot = r.parts[mask];
      slot += sgn * c;
      if (slot == 0) r.parts.erase(mask);
    }
  };
  acc(parts, 1);
  acc(o.parts, 1);
  acc(both.parts, -1);
  return r;
}

MultiPoly csm_coordinate_arrangement(const std::vector<MultiPoly>& weights,
                                     const CoordRegion& region) {
  if ((int)weights.size() != region.nvars)
    throw arg_error("csm_coordinate_arrangement: " +
                    std::to_string(weights.size()) + " weights for an ambient " +
                    std::to_string(region.nvars) + "-space");
  VarTable vt = weights.empty() ? VarTable{} : weights[0].vt;
  for (const auto& w : weights) {
    if (!(w.vt == vt))
      throw arg_error("csm_coordinate_arrangement: mixed variable tables");
    if (w.degree() > 1 || w.constant_term() != 0)
      throw arg_error(
          "csm_coordinate_arrangement: weights must be linear forms");
  }
  MultiPoly acc = MultiPoly::zero(vt);
  for (const auto& [mask, mult] : region.parts) {
    MultiPoly term = MultiPoly::constant(vt, 1);
    for (int i = 0; i < region.nvars; ++i) {
      if (mask & (std::uint64_t(1) << i))
        term = term * weights[i];
      else
        term = term * (weights[i] + MultiPoly::constant(vt, 1));
    }
    term.scale(Rat(mult));
    acc += term;
  }
  return acc;
}

// ---- ordinary Schubert cell variants --------------------------------------

SchubertCellClass schubert_cell_classes(const ColumnSet& I, SchubertVariant v,
                                        int cap) {
  const int k = I.k, n = I.n;
  if (I.d() != k)
    throw arg_error("schubert_cell_classes: " + I.str() +
                    " is not full rank (|I| < k)");
  if (cap < 0) throw arg_error("schubert_cell_classes: negative cap");
  VarTable vt = cell_table(k, n);
  IntVec lam = lambda_of_set(I);
  VarTable zt;
  zt.nz = k;
  zt.validate();

  SchubertCellClass out;
  out.variant = v;
  out.k = k;
  out.n = n;
  out.cap = cap;

  std::vector<int> block;
  for (int u = 1; u <= k; ++u) block.push_back(vt.alpha(u));
  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 1; u <= k; ++u)
    for (int w = u + 1; w <= k; ++w)
      all_pairs.push_back({vt.alpha(u), vt.alpha(w)});
  const int capV = cap + k * (k - 1) / 2;

  // exponent of (1+z_j) in the generating numerators: n - i_{k+1-j}
  auto zexp = [&](int j) { return n - I.cols[k - j]; };

  if (v == SchubertVariant::MatrixCSM) {
    out.value_poly = weight_function(I);
    out.value = TruncatedSeries(out.value_poly, out.value_poly.degree());
    MultiPoly F = MultiPoly::constant(zt, 1);
    for (int j = 1; j <= k; ++j) {
      F = F * zpow(zt, zt.zvar(j), lam[j - 1]);
      F = F * pow(lin(zt, 1, zt.zvar(j), -1), zexp(j));
    }
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        F = F * lin(zt, 1, zt.zvar(i), zt.zvar(j));
    out.schur_form = schur_series_from_zpoly(F, std::max(0, F.degree()));
    return out;
  }

  if (v == SchubertVariant::GrassmannianCSM) {
    MultiPoly num = MultiPoly::constant(vt, 1);
    for (int u = 1; u <= k; ++u) {
      const int iu = I.cols[u - 1];
      for (int v2 = iu + 1; v2 <= n; ++v2)
        num = mul(num, lin(vt, 1, vt.beta(v2), vt.alpha(u)), capV);
      for (int v2 = 1; v2 <= iu - 1; ++v2)
        num = mul(num, lin(vt, 0, vt.beta(v2), vt.alpha(u)), capV);
    }
    for (int u = 1; u <= k; ++u)
      for (int w = u + 1; w <= k; ++w)
        num = series_div_unit(num, lin(vt, 1, vt.alpha(w), vt.alpha(u)), capV);
    MultiPoly sym = symmetrize_over_block(num, all_pairs, block, Rat(1));
    out.value = TruncatedSeries(std::move(sym), cap);

    MultiPoly F = MultiPoly::constant(zt, 1);
    for (int j = 1; j <= k; ++j) {
      F = mul(F, zpow(zt, zt.zvar(j), lam[j - 1]), cap);
      F = mul(F, pow(lin(zt, 1, zt.zvar(j), -1), zexp(j), cap), cap);
    }
    for (int j = 1; j <= k; ++j)
      for (int i = j + 1; i <= k; ++i)
        F = series_div_unit(F, lin(zt, 1, zt.zvar(i), zt.zvar(j)), cap);
    out.schur_form = schur_series_from_zpoly(F, cap);
    return out;
  }

  // MatrixSSM
  MultiPoly num = MultiPoly::constant(vt, 1);
  for (int u = 1; u <= k; ++u) {
    const int iu = I.cols[u - 1];
    for (int v2 = 1; v2 <= iu - 1; ++v2)
      num = mul(num, lin(vt, 0, vt.beta(v2), vt.alpha(u)), capV);
    for (int w = u + 1; w <= k; ++w)
      num = mul(num, lin(vt, 1, vt.alpha(u), vt.alpha(w)), capV);
  }
  for (int u = 1; u <= k; ++u)
    for (int v2 = 1; v2 <= I.cols[u - 1]; ++v2)
      num = series_div_unit(num, lin(vt, 1, vt.beta(v2), vt.alpha(u)), capV);
  MultiPoly sym = symmetrize_over_block(num, all_pairs, block, Rat(1));
  out.value = TruncatedSeries(std::move(sym), cap);

  RationalSeriesExpr expr;
  expr.num = MultiPoly::constant(zt, 1);
  for (int j = 1; j <= k; ++j)
    expr.num = expr.num * zpow(zt, zt.zvar(j), lam[j - 1]);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      expr.num = expr.num * lin(zt, 1, zt.zvar(i), zt.zvar(j));
  for (int i = 1; i <= k; ++i)
    expr.den.push_back({i, 1, lam[i - 1] + (k - i + 1)});
  out.schur_form = sss_expand(expr, cap);
  return out;
}

}  // namespace ssmkit
