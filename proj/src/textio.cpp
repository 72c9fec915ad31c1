#include "ssmkit/textio.hpp"

#include <json.hpp>

namespace ssmkit {

using ordered_json = nlohmann::ordered_json;

std::string json_poly(const MultiPoly& p) {
  ordered_json out;
  out["vars"] = p.vt.names();
  ordered_json terms = ordered_json::array();
  for (const auto& t : p.terms) {
    ordered_json term;
    std::vector<int> exp(p.vt.total());
    for (int i = 0; i < p.vt.total(); ++i) exp[i] = t.m.exp(i);
    term["exp"] = exp;
    term["coeff"] = rat_str(t.c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out.dump();
}

std::string json_schur(const SchurSeries& s) {
  ordered_json out;
  out["basis"] = "schur";
  out["cap"] = s.cap;
  ordered_json terms = ordered_json::array();
  for (const auto& [lam, c] : s.terms) {
    ordered_json term;
    term["lambda"] = lam.parts;
    term["coeff"] = rat_str(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out.dump();
}

}  // namespace ssmkit
