#include "ssmkit/schur.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

namespace ssmkit {

Straightened straighten(const IntVec& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = v[i] - (i + 1);
  int sign = 1;
  // Bubble the contents into strictly decreasing order; each adjacent
  // exchange realizes one application of the rewrite rule and flips the
  // sign, equal contents mean the symbol vanishes.
  for (int pass = 0; pass < n; ++pass)
    for (int i = 0; i + 1 < n; ++i) {
      if (c[i] == c[i + 1]) return {true, 1, {}};
      if (c[i] < c[i + 1]) {
        std::swap(c[i], c[i + 1]);
        sign = -sign;
      }
    }
  std::vector<int> lam(n);
  for (int i = 0; i < n; ++i) {
    lam[i] = c[i] + (i + 1);
    if (lam[i] < 0) return {true, 1, {}};
  }
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  return {false, sign, Partition(std::move(lam))};
}

void SchurSeries::add(const IntVec& v, const Rat& coeff) {
  if (coeff == 0) return;
  Straightened s = straighten(v);
  if (s.zero) return;
  add(s.lam, s.sign > 0 ? coeff : Rat(-coeff));
}

void SchurSeries::add(const Partition& lam, const Rat& coeff) {
  if (coeff == 0 || lam.weight() > cap) return;
  auto [it, fresh] = terms.emplace(lam, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

Rat SchurSeries::coeff(const Partition& lam) const {
  auto it = terms.find(lam);
  return it == terms.end() ? Rat(0) : it->second;
}

SchurSeries& SchurSeries::operator+=(const SchurSeries& o) {
  cap = std::min(cap, o.cap);
  for (const auto& [lam, c] : o.terms) add(lam, c);
  std::erase_if(terms, [&](const auto& kv) { return kv.first.weight() > cap; });
  return *this;
}

SchurSeries& SchurSeries::operator-=(const SchurSeries& o) {
  cap = std::min(cap, o.cap);
  for (const auto& [lam, c] : o.terms) add(lam, Rat(-c));
  std::erase_if(terms, [&](const auto& kv) { return kv.first.weight() > cap; });
  return *this;
}

void SchurSeries::scale(const Rat& s) {
  if (s == 0) {
    terms.clear();
    return;
  }
  for (auto& [lam, c] : terms) c *= s;
}

std::string to_text(const SchurSeries& s) {
  if (s.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : s.terms) {
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (lam.length() == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "Sc" << lam.str();
    }
  }
  return os.str();
}

namespace {

void require_pure_z(const VarTable& vt, const char* who) {
  if (vt.na != 0 || vt.nb != 0 || vt.nc != 0)
    throw arg_error(std::string(who) + ": expression must live in the z block");
}

}  // namespace

MultiPoly expand_rational(const RationalSeriesExpr& expr, int cap) {
  require_pure_z(expr.num.vt, "expand_rational");
  MultiPoly acc = truncate(expr.num, cap);
  for (const auto& f : expr.den) {
    if (f.zindex < 1 || f.zindex > expr.num.vt.nz || f.power < 1)
      throw arg_error("expand_rational: malformed denominator factor");
    if (f.kappa == 0) continue;
    // (1 + kappa z)^(-p) = sum_j C(p+j-1, j) (-kappa)^j z^j
    MultiPoly geo = MultiPoly::zero(expr.num.vt);
    Rat mk(-f.kappa);
    Rat kpow(1);
    for (int j = 0; j <= cap; ++j) {
      Mono m;
      m.set_exp(expr.num.vt.zvar(f.zindex), j);
      Rat coeff = Rat(binomial(f.power + j - 1, j)) * kpow;
      if (coeff != 0) geo.terms.push_back({m, coeff});
      kpow *= mk;
    }
    acc = mul(acc, geo, cap);
  }
  return acc;
}

SchurSeries schur_series_from_zpoly(const MultiPoly& zp, int cap) {
  require_pure_z(zp.vt, "schur_series_from_zpoly");
  const int mu = zp.vt.nz;
  SchurSeries out(cap);
  IntVec v(mu);
  for (const auto& t : zp.terms) {
    if (t.m.deg() > cap) break;
    for (int i = 1; i <= mu; ++i) v[i - 1] = t.m.exp(zp.vt.zvar(i));
    out.add(v, t.c);
  }
  return out;
}

SchurSeries sss_expand(const RationalSeriesExpr& expr, int cap) {
  return schur_series_from_zpoly(expand_rational(expr, cap), cap);
}

namespace {

// Jacobi-Trudi determinant of Sc_lam over free symbols, as a signed list of
// index multisets (partitions of |lam|): det(c_{lam_i + j - i}).
std::vector<std::pair<Partition, long>> jacobi_trudi_index_terms(
    const Partition& lam) {
  const int l = lam.length();
  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  std::map<Partition, long, PartLess> acc;
  do {
    int sign = 1;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    std::vector<int> idx;
    bool dead = false;
    for (int i = 0; i < l && !dead; ++i) {
      int e = lam.part(i + 1) + (perm[i] + 1) - (i + 1);
      if (e < 0) dead = true;
      else if (e > 0) idx.push_back(e);
    }
    if (!dead) {
      std::sort(idx.begin(), idx.end(), std::greater<int>());
      acc[Partition(std::move(idx))] += sign;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::pair<Partition, long>> out;
  for (auto& [p, s] : acc)
    if (s != 0) out.push_back({p, s});
  return out;
}

// Elimination of a free-symbol polynomial against Jacobi-Trudi determinants,
// dominance-minimal first.  weight(monomial) = sum of symbol indices.
SchurSeries schur_from_cpoly(const MultiPoly& cp, int cap) {
  std::map<int, std::map<Partition, Rat, PartLess>> buckets;
  for (const auto& t : cp.terms) {
    std::vector<int> parts;
    int w = 0;
    for (int u = cp.vt.nc; u >= 1; --u)
      for (int e = 0; e < t.m.exp(cp.vt.cvar(u)); ++e) {
        parts.push_back(u);
        w += u;
      }
    buckets[w][Partition(std::move(parts))] += t.c;
  }
  SchurSeries out(cap);
  for (auto& [w, work] : buckets) {
    std::erase_if(work, [](const auto& kv) { return kv.second == 0; });
    while (!work.empty()) {
      // dominance-minimal key (ties broken by the canonical order)
      const Partition* pick = nullptr;
      for (const auto& [p, c] : work) {
        bool minimal = true;
        for (const auto& [q, c2] : work)
          if (dominance_lt(q, p)) {
            minimal = false;
            break;
          }
        if (minimal) {
          pick = &p;
          break;
        }
      }
      Partition mu = *pick;
      Rat e = work[mu];
      out.add(mu, e);
      for (const auto& [nu, s] : jacobi_trudi_index_terms(mu)) {
        auto [it, fresh] = work.emplace(nu, Rat(-e * s));
        if (!fresh) {
          it->second -= e * s;
          if (it->second == 0) work.erase(it);
        } else if (it->second == 0) {
          work.erase(it);
        }
      }
    }
  }
  return out;
}

}  // namespace

SchurSeries residue_at_infinity(const RationalSeriesExpr& expr, int cap) {
  require_pure_z(expr.num.vt, "residue_at_infinity");
  const VarTable& vt = expr.num.vt;
  const int mu = vt.nz;
  const int extra = mu * (mu - 1) / 2;
  MultiPoly q = expand_rational(expr, cap + extra);
  for (int i = 1; i <= mu; ++i)
    for (int j = i + 1; j <= mu; ++j)
      q = mul(q, MultiPoly::variable(vt, vt.zvar(j)) -
                     MultiPoly::variable(vt, vt.zvar(i)),
              cap + extra);
  VarTable ct;
  ct.nc = cap;
  std::vector<MultiPoly::Term> raw;
  for (const auto& t : q.terms) {
    // collect all shifted exponents first: a negative one kills the whole
    // term, so no c-index may be touched until the sign check is done
    std::array<int, kMaxVars> part{};
    bool dead = false;
    for (int i = 1; i <= mu && !dead; ++i) {
      part[i] = t.m.exp(vt.zvar(i)) - (i - 1);
      if (part[i] < 0) dead = true;
    }
    if (dead) continue;
    Mono m;
    for (int i = 1; i <= mu; ++i)
      if (part[i] > 0) m.bump(ct.cvar(part[i]), 1);
    raw.push_back({m, t.c});
  }
  return schur_from_cpoly(MultiPoly::from_terms(ct, std::move(raw)), cap);
}

bool rho_kernel_test(const Partition& lam, int k, int n) {
  if (k < 0 || n < 0) throw arg_error("rho_kernel_test: bad dimensions");
  return lam.part(k + 1) >= n + 1;
}

std::vector<MultiPoly> chern_coefficients(const VarTable& vt, int D) {
  std::vector<MultiPoly> cs{MultiPoly::constant(vt, 1)};
  cs.resize(D + 1, MultiPoly::zero(vt));
  int top = 0;
  for (int v = 1; v <= vt.nb; ++v) {
    MultiPoly bv = MultiPoly::variable(vt, vt.beta(v));
    int newtop = std::min(D, top + 1);
    for (int d = newtop; d >= 1; --d) cs[d] += bv * cs[d - 1];
    top = newtop;
  }
  for (int u = 1; u <= vt.na; ++u) {
    MultiPoly au = MultiPoly::variable(vt, vt.alpha(u));
    for (int d = 1; d <= D; ++d) cs[d] -= au * cs[d - 1];
  }
  return cs;
}

namespace {

std::mutex rho_cache_mutex;
std::map<std::tuple<std::vector<int>, int, int>, MultiPoly> rho_cache;

MultiPoly schur_to_poly_uncached(const Partition& lam, const VarTable& flat) {
  const int l = lam.length();
  if (l == 0) return MultiPoly::constant(flat, 1);
  const int D = lam.part(1) + l - 1;
  std::vector<MultiPoly> cs = chern_coefficients(flat, D);
  auto entry = [&](int row, int col) -> MultiPoly {  // 1-based
    int e = lam.part(row) + col - row;
    if (e < 0 || e > D) return MultiPoly::zero(flat);
    return cs[e];
  };
  // Cofactor expansion along the leading remaining column, memoized on the
  // row subset; column index is determined by the subset size.
  std::vector<MultiPoly> f(std::size_t(1) << l, MultiPoly::zero(flat));
  f[0] = MultiPoly::constant(flat, 1);
  for (unsigned mask = 1; mask < (1u << l); ++mask) {
    int sz = __builtin_popcount(mask);
    int col = l - sz + 1;
    MultiPoly acc = MultiPoly::zero(flat);
    int r = 0;
    for (int row = 1; row <= l; ++row) {
      if (!(mask & (1u << (row - 1)))) continue;
      ++r;
      MultiPoly piece = entry(row, col) * f[mask & ~(1u << (row - 1))];
      if (r % 2 == 0) piece.negate();
      acc += piece;
    }
    f[mask] = std::move(acc);
  }
  return f[(1u << l) - 1];
}

}  // namespace

MultiPoly schur_to_poly(const Partition& lam, const VarTable& vt) {
  VarTable flat;
  flat.na = vt.na;
  flat.nb = vt.nb;
  auto key = std::make_tuple(lam.parts, vt.na, vt.nb);
  {
    std::lock_guard<std::mutex> lock(rho_cache_mutex);
    auto it = rho_cache.find(key);
    if (it != rho_cache.end()) return MultiPoly{vt, it->second.terms};
  }
  MultiPoly flatpoly = schur_to_poly_uncached(lam, flat);
  {
    std::lock_guard<std::mutex> lock(rho_cache_mutex);
    rho_cache.emplace(key, flatpoly);
  }
  // Alpha/beta blocks lead the variable order, so the terms embed verbatim
  // into any table with the same (na, nb) and extra trailing blocks.
  return MultiPoly{vt, std::move(flatpoly.terms)};
}

TruncatedSeries apply_rho(const SchurSeries& s, const VarTable& vt, int cap) {
  int rcap = std::min(cap, s.cap);
  MultiPoly acc = MultiPoly::zero(vt);
  for (const auto& [lam, c] : s.terms) {
    if (lam.weight() > rcap) continue;
    if (rho_kernel_test(lam, vt.na, vt.nb)) continue;
    MultiPoly img = schur_to_poly(lam, vt);
    img.scale(c);
    acc += img;
  }
  return TruncatedSeries(std::move(acc), rcap);
}

}  // namespace ssmkit
