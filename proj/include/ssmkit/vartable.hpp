#pragma once

#include <string>
#include <vector>

#include "ssmkit/rational.hpp"

namespace ssmkit {

// Hard cap on simultaneously live variables in one polynomial ring.
inline constexpr int kMaxVars = 46;

// Ambient variable blocks, in canonical order:
//   a1..a_na  (equivariant parameters of the group acting on rows),
//   b1..b_nb  (torus parameters on columns),
//   z1..z_nz  (formal expansion variables),
//   c1..c_nc  (free basis symbols for independent cross-checks).
// A polynomial is always attached to one VarTable; binary operations
// require identical tables.
struct VarTable {
  int na = 0, nb = 0, nz = 0, nc = 0;

  int total() const { return na + nb + nz + nc; }

  int alpha(int u) const { check(u >= 1 && u <= na, "alpha index"); return u - 1; }
  int beta(int v) const { check(v >= 1 && v <= nb, "beta index"); return na + v - 1; }
  int zvar(int j) const { check(j >= 1 && j <= nz, "z index"); return na + nb + j - 1; }
  int cvar(int u) const { check(u >= 1 && u <= nc, "c index"); return na + nb + nz + u - 1; }

  std::string name(int i) const {
    if (i < na) return "a" + std::to_string(i + 1);
    i -= na;
    if (i < nb) return "b" + std::to_string(i + 1);
    i -= nb;
    if (i < nz) return "z" + std::to_string(i + 1);
    i -= nz;
    return "c" + std::to_string(i + 1);
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(total());
    for (int i = 0; i < total(); ++i) out.push_back(name(i));
    return out;
  }

  bool operator==(const VarTable&) const = default;

  void validate() const {
    check(na >= 0 && nb >= 0 && nz >= 0 && nc >= 0, "negative block size");
    check(total() <= kMaxVars, "too many variables for one ring");
  }

 private:
  static void check(bool ok, const char* what) {
    if (!ok) throw arg_error(std::string("VarTable: bad ") + what);
  }
};

}  // namespace ssmkit
