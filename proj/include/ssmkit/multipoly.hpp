#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssmkit/monomial.hpp"
#include "ssmkit/rational.hpp"
#include "ssmkit/vartable.hpp"

namespace ssmkit {

// degree(0) — the zero polynomial has no degree.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min();

// Targets for rename_vars: send a variable to 0 or to 1.
inline constexpr int kMapZero = -1;
inline constexpr int kMapOne = -2;

// Sparse exact-coefficient polynomial.  Terms are kept sorted in the
// canonical order (total degree, then exponent-vector lex, ascending) with
// no zero coefficients; the zero polynomial is the empty list.
struct MultiPoly {
  struct Term {
    Mono m;
    Rat c;
  };

  VarTable vt;
  std::vector<Term> terms;

  static MultiPoly zero(const VarTable& vt) { return MultiPoly{vt, {}}; }
  static MultiPoly constant(const VarTable& vt, Rat c);
  static MultiPoly variable(const VarTable& vt, int var);
  static MultiPoly monomial(const VarTable& vt, const Mono& m, Rat c);

  bool is_zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? kNegInfDeg : terms.back().m.deg(); }
  int low_degree() const { return terms.empty() ? kNegInfDeg : terms.front().m.deg(); }
  std::size_t size() const { return terms.size(); }

  Rat coeff(const Mono& m) const;
  Rat constant_term() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  void scale(const Rat& s);
  void negate();

  bool operator==(const MultiPoly& o) const;

  // Re-establishes the invariant from an arbitrary term list.
  static MultiPoly from_terms(const VarTable& vt, std::vector<Term> raw);
};

MultiPoly operator+(const MultiPoly& x, const MultiPoly& y);
MultiPoly operator-(const MultiPoly& x, const MultiPoly& y);
MultiPoly operator-(const MultiPoly& x);
MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
MultiPoly operator*(const MultiPoly& x, const Rat& s);

// Product with optional degree cap (cap < 0 means exact product).
MultiPoly mul(const MultiPoly& x, const MultiPoly& y, int cap = -1);
MultiPoly pow(const MultiPoly& x, int e, int cap = -1);

MultiPoly truncate(const MultiPoly& p, int cap);
MultiPoly graded_component(const MultiPoly& p, int d);
// All nonzero homogeneous components, degree ascending.
std::vector<std::pair<int, MultiPoly>> graded_components(const MultiPoly& p);

// var i -> variable to[i] of `out`, or kMapZero / kMapOne.  Distinct
// variables may share a target; exponents then add.
MultiPoly rename_vars(const MultiPoly& p, const VarTable& out,
                      const std::vector<int>& to);

// Simultaneous substitution: variable i -> images[i] (all in `out`).
MultiPoly substitute(const MultiPoly& p, const VarTable& out,
                     const std::vector<MultiPoly>& images);

Rat eval(const MultiPoly& p, const std::vector<Rat>& point);

// Exact division by a polynomial of total degree <= 1, `multiplicity` times.
// Throws math_error carrying the remainder when the division is not exact.
MultiPoly divide_by_linear(const MultiPoly& p, const MultiPoly& linear,
                           int multiplicity = 1);
std::optional<MultiPoly> try_divide_linear(const MultiPoly& p,
                                           const MultiPoly& linear);

// p / u in the ring truncated at total degree `cap`; u must have a nonzero
// constant term.
MultiPoly series_div_unit(const MultiPoly& p, const MultiPoly& u, int cap);

// Sum over all permutations of `block` (a list of variable indices) of
//   sigma(num) / prod_{(i,j) in den_pairs} (x_sigma(i) - x_sigma(j)),
// evaluated exactly over the common denominator prod_{s<t}(x_block[s] -
// x_block[t]), then divided by scalar_divisor.  den_pairs must be distinct
// unordered pairs of block variables.  Throws math_error if the result is
// not a polynomial.
MultiPoly symmetrize_over_block(const MultiPoly& num,
                                const std::vector<std::pair<int, int>>& den_pairs,
                                const std::vector<int>& block,
                                const Rat& scalar_divisor = 1);

std::string to_text(const MultiPoly& p);

// A polynomial carrying the total-degree cutoff it is valid to; arithmetic
// propagates the weaker cap.
struct TruncatedSeries {
  MultiPoly p;
  int cap = 0;

  TruncatedSeries() = default;
  TruncatedSeries(MultiPoly poly, int c) : p(truncate(poly, c)), cap(c) {}

  bool operator==(const TruncatedSeries& o) const {
    return cap == o.cap && p == o.p;
  }
};

TruncatedSeries add(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries sub(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries mul(const TruncatedSeries& x, const TruncatedSeries& y);

}  // namespace ssmkit
