#include "ssmkit/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ssmkit {

namespace {

// Merge two canonical term lists with coefficient combiners (+1 / -1).
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b,
                                         int bsign) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = cmp(a[i].m, b[j].m);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j]);
      if (bsign < 0) out.back().c = -out.back().c;
      ++j;
    } else {
      Rat s = bsign < 0 ? Rat(a[i].c - b[j].c) : Rat(a[i].c + b[j].c);
      if (s != 0) out.push_back({a[i].m, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (bsign < 0) out.back().c = -out.back().c;
  }
  return out;
}

void require_same_table(const MultiPoly& x, const MultiPoly& y) {
  if (!(x.vt == y.vt)) throw arg_error("MultiPoly: mismatched variable tables");
}

// One term times a full polynomial; preserves term order.
std::vector<MultiPoly::Term> shifted(const std::vector<MultiPoly::Term>& terms,
                                     const MultiPoly::Term& by, int cap) {
  std::vector<MultiPoly::Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (cap >= 0 && t.m.deg() + by.m.deg() > cap) break;
    out.push_back({Mono::mul(t.m, by.m), t.c * by.c});
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(const VarTable& vt, Rat c) {
  MultiPoly p{vt, {}};
  if (c != 0) p.terms.push_back({Mono{}, std::move(c)});
  return p;
}

MultiPoly MultiPoly::variable(const VarTable& vt, int var) {
  if (var < 0 || var >= vt.total()) throw arg_error("MultiPoly: bad variable");
  Mono m;
  m.set_exp(var, 1);
  return MultiPoly{vt, {{m, Rat(1)}}};
}

MultiPoly MultiPoly::monomial(const VarTable& vt, const Mono& m, Rat c) {
  MultiPoly p{vt, {}};
  if (c != 0) p.terms.push_back({m, std::move(c)});
  return p;
}

Rat MultiPoly::coeff(const Mono& m) const {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), m,
      [](const Term& t, const Mono& k) { return t.m < k; });
  if (it != terms.end() && it->m == m) return it->c;
  return Rat(0);
}

Rat MultiPoly::constant_term() const { return coeff(Mono{}); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_table(*this, o);
  terms = merge_terms(terms, o.terms, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_table(*this, o);
  terms = merge_terms(terms, o.terms, -1);
  return *this;
}

void MultiPoly::scale(const Rat& s) {
  if (s == 0) {
    terms.clear();
    return;
  }
  for (auto& t : terms) t.c *= s;
}

void MultiPoly::negate() {
  for (auto& t : terms) t.c = -t.c;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!(vt == o.vt) || terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (!(terms[i].m == o.terms[i].m) || terms[i].c != o.terms[i].c)
      return false;
  return true;
}

MultiPoly MultiPoly::from_terms(const VarTable& vt, std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& x, const Term& y) { return x.m < y.m; });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(std::move(t));
    }
  }
  return MultiPoly{vt, std::move(out)};
}

MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
  require_same_table(x, y);
  return MultiPoly{x.vt, merge_terms(x.terms, y.terms, +1)};
}

MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) {
  require_same_table(x, y);
  return MultiPoly{x.vt, merge_terms(x.terms, y.terms, -1)};
}

MultiPoly operator-(const MultiPoly& x) {
  MultiPoly r = x;
  r.negate();
  return r;
}

MultiPoly mul(const MultiPoly& x, const MultiPoly& y, int cap) {
  require_same_table(x, y);
  const MultiPoly& small = x.size() <= y.size() ? x : y;
  const MultiPoly& large = x.size() <= y.size() ? y : x;
  if (small.is_zero()) return MultiPoly::zero(x.vt);
  if (small.size() <= 8) {
    // Repeated merge of shifted copies: cheap for the factor-by-factor
    // products that dominate the kit.
    std::vector<MultiPoly::Term> acc;
    for (const auto& t : small.terms)
      acc = merge_terms(acc, shifted(large.terms, t, cap), +1);
    return MultiPoly{x.vt, std::move(acc)};
  }
  std::map<Mono, Rat> acc;
  for (const auto& s : small.terms) {
    for (const auto& l : large.terms) {
      if (cap >= 0 && s.m.deg() + l.m.deg() > cap) break;
      Mono m = Mono::mul(s.m, l.m);
      auto [it, fresh] = acc.emplace(m, s.c * l.c);
      if (!fresh) it->second += s.c * l.c;
    }
  }
  std::vector<MultiPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  return MultiPoly{x.vt, std::move(out)};
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  return mul(x, y, -1);
}

MultiPoly operator*(const MultiPoly& x, const Rat& s) {
  MultiPoly r = x;
  r.scale(s);
  return r;
}

MultiPoly pow(const MultiPoly& x, int e, int cap) {
  if (e < 0) throw arg_error("pow: negative exponent");
  MultiPoly r = MultiPoly::constant(x.vt, 1);
  for (int i = 0; i < e; ++i) r = mul(r, x, cap);
  return r;
}

MultiPoly truncate(const MultiPoly& p, int cap) {
  MultiPoly r{p.vt, {}};
  for (const auto& t : p.terms) {
    if (t.m.deg() > cap) break;
    r.terms.push_back(t);
  }
  return r;
}

MultiPoly graded_component(const MultiPoly& p, int d) {
  MultiPoly r{p.vt, {}};
  for (const auto& t : p.terms)
    if (t.m.deg() == d) r.terms.push_back(t);
  return r;
}

std::vector<std::pair<int, MultiPoly>> graded_components(const MultiPoly& p) {
  std::vector<std::pair<int, MultiPoly>> out;
  for (const auto& t : p.terms) {
    if (out.empty() || out.back().first != t.m.deg())
      out.push_back({t.m.deg(), MultiPoly::zero(p.vt)});
    out.back().second.terms.push_back(t);
  }
  return out;
}

MultiPoly rename_vars(const MultiPoly& p, const VarTable& out,
                      const std::vector<int>& to) {
  if (static_cast<int>(to.size()) != p.vt.total())
    throw arg_error("rename_vars: map size mismatch");
  std::vector<MultiPoly::Term> raw;
  raw.reserve(p.size());
  for (const auto& t : p.terms) {
    Mono m;
    bool dead = false;
    for (int v = 0; v < p.vt.total() && !dead; ++v) {
      int e = t.m.exp(v);
      if (e == 0) continue;
      if (to[v] == kMapZero) {
        dead = true;
      } else if (to[v] == kMapOne) {
        // exponent discarded
      } else {
        if (to[v] < 0 || to[v] >= out.total())
          throw arg_error("rename_vars: bad target variable");
        m.bump(to[v], e);
      }
    }
    if (!dead) raw.push_back({m, t.c});
  }
  return MultiPoly::from_terms(out, std::move(raw));
}

MultiPoly substitute(const MultiPoly& p, const VarTable& out,
                     const std::vector<MultiPoly>& images) {
  if (static_cast<int>(images.size()) != p.vt.total())
    throw arg_error("substitute: image count mismatch");
  for (const auto& im : images)
    if (!(im.vt == out)) throw arg_error("substitute: image table mismatch");
  std::vector<std::vector<MultiPoly>> pw(images.size());
  auto power = [&](int v, int e) -> const MultiPoly& {
    auto& col = pw[v];
    if (col.empty()) col.push_back(MultiPoly::constant(out, 1));
    while (static_cast<int>(col.size()) <= e)
      col.push_back(col.back() * images[v]);
    return col[e];
  };
  MultiPoly acc = MultiPoly::zero(out);
  for (const auto& t : p.terms) {
    MultiPoly prod = MultiPoly::constant(out, t.c);
    for (int v = 0; v < p.vt.total(); ++v)
      if (int e = t.m.exp(v); e > 0) prod = prod * power(v, e);
    acc += prod;
  }
  return acc;
}

Rat eval(const MultiPoly& p, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != p.vt.total())
    throw arg_error("eval: point size mismatch");
  Rat acc = 0;
  for (const auto& t : p.terms) {
    Rat v = t.c;
    for (int i = 0; i < p.vt.total(); ++i)
      for (int e = 0; e < t.m.exp(i); ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

namespace {

// Quotient and remainder of division by a total-degree-<=1 polynomial,
// eliminating the chosen pivot variable.
std::pair<MultiPoly, MultiPoly> linear_divmod(const MultiPoly& p,
                                              const MultiPoly& linear) {
  if (linear.is_zero() || linear.degree() > 1)
    throw arg_error("divide_by_linear: divisor must be linear and nonzero");
  if (linear.degree() == 0) {
    MultiPoly q = p;
    q.scale(Rat(1) / linear.constant_term());
    return {std::move(q), MultiPoly::zero(p.vt)};
  }
  int pivot = -1;
  Rat a;
  for (const auto& t : linear.terms) {
    if (t.m.deg() != 1) continue;
    for (int v = p.vt.total() - 1; v >= 0; --v)
      if (t.m.exp(v) == 1 && v > pivot) {
        pivot = v;
        a = t.c;
      }
  }
  MultiPoly cur = p;
  MultiPoly q = MultiPoly::zero(p.vt);
  MultiPoly xp = MultiPoly::variable(p.vt, pivot);
  while (true) {
    int dmax = 0;
    for (const auto& t : cur.terms) dmax = std::max(dmax, t.m.exp(pivot));
    if (dmax == 0) break;
    MultiPoly pd{p.vt, {}};
    for (const auto& t : cur.terms)
      if (t.m.exp(pivot) == dmax) {
        MultiPoly::Term s = t;
        s.m.set_exp(pivot, 0);
        pd.terms.push_back(std::move(s));
      }
    pd.scale(Rat(1) / a);
    MultiPoly step = pd * pow(xp, dmax - 1);
    q += step;
    cur -= step * linear;
  }
  return {std::move(q), std::move(cur)};
}

}  // namespace

std::optional<MultiPoly> try_divide_linear(const MultiPoly& p,
                                           const MultiPoly& linear) {
  auto [q, r] = linear_divmod(p, linear);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

MultiPoly divide_by_linear(const MultiPoly& p, const MultiPoly& linear,
                           int multiplicity) {
  if (multiplicity < 0) throw arg_error("divide_by_linear: bad multiplicity");
  MultiPoly cur = p;
  for (int round = 0; round < multiplicity; ++round) {
    auto [q, r] = linear_divmod(cur, linear);
    if (!r.is_zero())
      throw math_error("divide_by_linear: non-exact, remainder " + to_text(r) +
                       " dividing by " + to_text(linear));
    cur = std::move(q);
  }
  return cur;
}

MultiPoly series_div_unit(const MultiPoly& p, const MultiPoly& u, int cap) {
  Rat u0 = u.constant_term();
  if (u0 == 0) throw arg_error("series_div_unit: divisor is not a unit");
  std::vector<MultiPoly> v(cap + 1, MultiPoly::zero(p.vt));
  for (const auto& [d, comp] : graded_components(u))
    if (d >= 1 && d <= cap) v[d] = comp;
  std::vector<MultiPoly> q(cap + 1, MultiPoly::zero(p.vt));
  for (int m = 0; m <= cap; ++m) {
    MultiPoly rhs = graded_component(p, m);
    for (int j = 1; j <= m; ++j)
      if (!v[j].is_zero() && !q[m - j].is_zero()) rhs -= v[j] * q[m - j];
    rhs.scale(Rat(1) / u0);
    q[m] = std::move(rhs);
  }
  MultiPoly acc = MultiPoly::zero(p.vt);
  for (auto& part : q) acc += part;
  return acc;
}

MultiPoly symmetrize_over_block(const MultiPoly& num,
                                const std::vector<std::pair<int, int>>& den_pairs,
                                const std::vector<int>& block,
                                const Rat& scalar_divisor) {
  const int n = static_cast<int>(block.size());
  std::vector<int> pos(num.vt.total(), -1);
  for (int s = 0; s < n; ++s) pos[block[s]] = s;
  // Normalize denominator factors to (earlier block slot, later block slot).
  std::vector<std::pair<int, int>> pairs;
  int base_sign = 1;
  for (auto [i, j] : den_pairs) {
    if (pos[i] < 0 || pos[j] < 0 || i == j)
      throw arg_error("symmetrize: denominator pair outside block");
    int s = pos[i], t = pos[j];
    if (s > t) {
      std::swap(s, t);
      base_sign = -base_sign;
    }
    pairs.push_back({s, t});
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw arg_error("symmetrize: repeated denominator factor");

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  MultiPoly total = MultiPoly::zero(num.vt);
  do {
    std::vector<int> to(num.vt.total());
    for (int v = 0; v < num.vt.total(); ++v) to[v] = v;
    for (int s = 0; s < n; ++s) to[block[s]] = block[perm[s]];
    MultiPoly term = rename_vars(num, num.vt, to);
    int sign = base_sign;
    std::vector<bool> hit(n * n, false);
    for (auto [s, t] : pairs) {
      int ps = perm[s], pt = perm[t];
      if (ps > pt) {
        std::swap(ps, pt);
        sign = -sign;
      }
      hit[ps * n + pt] = true;
    }
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t)
        if (!hit[s * n + t]) {
          MultiPoly d = MultiPoly::variable(num.vt, block[s]) -
                        MultiPoly::variable(num.vt, block[t]);
          term = term * d;
        }
    if (sign < 0) term.negate();
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      MultiPoly d = MultiPoly::variable(num.vt, block[s]) -
                    MultiPoly::variable(num.vt, block[t]);
      total = divide_by_linear(total, d);
    }
  if (scalar_divisor == 0) throw arg_error("symmetrize: zero scalar divisor");
  total.scale(Rat(1) / scalar_divisor);
  return total;
}

std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms) {
    Rat c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string vars;
    for (int v = 0; v < p.vt.total(); ++v) {
      int e = t.m.exp(v);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += p.vt.name(v);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << vars;
    }
  }
  return os.str();
}

TruncatedSeries add(const TruncatedSeries& x, const TruncatedSeries& y) {
  return TruncatedSeries(x.p + y.p, std::min(x.cap, y.cap));
}

TruncatedSeries sub(const TruncatedSeries& x, const TruncatedSeries& y) {
  return TruncatedSeries(x.p - y.p, std::min(x.cap, y.cap));
}

TruncatedSeries mul(const TruncatedSeries& x, const TruncatedSeries& y) {
  int cap = std::min(x.cap, y.cap);
  return TruncatedSeries(mul(x.p, y.p, cap), cap);
}

}  // namespace ssmkit
