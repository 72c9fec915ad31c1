#include <CLI11.hpp>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ssmkit/a2pp.hpp"
#include "ssmkit/cells.hpp"
#include "ssmkit/crosscheck.hpp"
#include "ssmkit/genfun.hpp"
#include "ssmkit/textio.hpp"
#include "ssmkit/weightfn.hpp"

using namespace ssmkit;

namespace {

constexpr int kMathFail = 1;
constexpr int kUsage = 2;

std::vector<int> parse_int_list(const std::string& s, const char* flag) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw arg_error(std::string(flag) + ": expected a comma-separated "
                      "integer list, got '" + s + "'");
    }
  }
  return out;
}

struct CellFlags {
  int k = 0, n = 0;
  std::string set_arg, lambda_arg;
  bool set_given = false, lambda_given = false;
};

void add_cell_flags(CLI::App* cmd, CellFlags& f) {
  cmd->add_option("--k", f.k, "rows of the Hom space")->required();
  cmd->add_option("--n", f.n, "columns of the Hom space")->required();
  auto* s = cmd->add_option("--set", f.set_arg,
                            "cell column set, e.g. 2,5 (empty string for {})");
  auto* l = cmd->add_option("--lambda", f.lambda_arg,
                            "cell partition, e.g. 3,1 (empty string for 0)");
  s->excludes(l);
  l->excludes(s);
}

ColumnSet resolve_cell(const CLI::App* cmd, const CellFlags& f) {
  if (f.k < 1) throw arg_error("--k: must be at least 1");
  if (f.n < 1) throw arg_error("--n: must be at least 1");
  bool has_set = cmd->count("--set") > 0;
  bool has_lambda = cmd->count("--lambda") > 0;
  if (has_set == has_lambda)
    throw arg_error("exactly one of --set / --lambda selects the cell");
  if (has_set) {
    std::vector<int> cols = parse_int_list(f.set_arg, "--set");
    try {
      return ColumnSet(f.k, f.n, cols);
    } catch (const arg_error& e) {
      throw arg_error(std::string("--set: ") + e.what());
    }
  }
  std::vector<int> lam = parse_int_list(f.lambda_arg, "--lambda");
  try {
    return set_of_lambda(lam, f.k, f.n);
  } catch (const arg_error& e) {
    throw arg_error(std::string("--lambda: ") + e.what());
  }
}

Partition parse_partition(const std::string& s, const char* flag) {
  std::vector<int> v = parse_int_list(s, flag);
  try {
    return Partition(v);
  } catch (const arg_error& e) {
    throw arg_error(std::string(flag) + ": " + e.what());
  }
}

void add_format_flag(CLI::App* cmd, std::string& fmt) {
  cmd->add_option("--format", fmt, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
}

void add_cap_flag(CLI::App* cmd, int& cap) {
  cmd->add_option("--cap", cap, "degree cap for truncated series")
      ->envname("SSM_KIT_CAP")
      ->default_val(10);
}

void emit_poly(const MultiPoly& p, const std::string& fmt) {
  std::cout << (fmt == "json" ? json_poly(p) : to_text(p)) << "\n";
}

void emit_schur(const SchurSeries& s, const std::string& fmt) {
  std::cout << (fmt == "json" ? json_schur(s) : to_text(s)) << "\n";
}

void require_positive_cap(int cap) {
  if (cap < 1) throw arg_error("--cap: must be at least 1");
}

MultiPoly euler_class_total(const VarTable& vt, int k, int n) {
  MultiPoly e = MultiPoly::constant(vt, 1);
  for (int u = 1; u <= k; ++u)
    for (int v = 1; v <= n; ++v) {
      MultiPoly f = MultiPoly::variable(vt, vt.beta(v));
      f -= MultiPoly::variable(vt, vt.alpha(u));
      e = e * f;
    }
  return e;
}

int run_verify_axioms(int k, int n, int perturb, unsigned seed) {
  OrbitClassList classes;
  for (const ColumnSet& I : enumerate_orbits(k, n))
    classes.push_back({I, weight_function(I)});
  AxiomReport base = verify_interpolation_axioms(classes, k, n);
  std::cout << "base family: " << base.summary() << "\n";
  bool ok = base.pass;
  for (const auto* f : base.failures())
    std::cout << "  failure: axiom " << f->axiom << " omega " << f->omega.str()
              << " theta " << f->theta.str() << ": " << f->witness << "\n";

  std::mt19937 rng(seed);
  const VarTable vt = cell_table(k, n);
  const MultiPoly ev = euler_class_total(vt, k, n);
  for (int round = 1; round <= perturb; ++round) {
    OrbitClassList mutated = classes;
    std::size_t which = rng() % mutated.size();
    // perturb by e(V) * q with q a small nonzero polynomial
    MultiPoly q = MultiPoly::constant(vt, 1 + static_cast<int>(rng() % 5));
    if (rng() % 2 == 0) {
      int var = static_cast<int>(rng() % vt.total());
      q = q * MultiPoly::variable(vt, var);
    }
    mutated[which].second += ev * q;
    AxiomReport rep = verify_interpolation_axioms(mutated, k, n);
    std::size_t fails = rep.failures().size();
    std::cout << "perturbation " << round << ": orbit "
              << mutated[which].first.str() << " -> "
              << (rep.pass ? "UNDETECTED" : "detected") << " (" << fails
              << " axiom failures)\n";
    if (rep.pass) ok = false;
  }
  if (!ok) std::cerr << "verification failure: see report above\n";
  return ok ? 0 : kMathFail;
}

int run_scan(int maxWeight, int cap, int jobs) {
  AlternatingReport rep = scan_alternating_signs(maxWeight, cap, jobs);
  for (const auto& e : rep.entries) {
    std::cout << "lambda " << e.lambda.str() << " vars " << e.varsUsed << " "
              << (e.pass ? "alternating" : "VIOLATION");
    if (!e.pass) {
      for (const auto& [mu, c] : e.violations)
        std::cout << " " << mu.str() << " coeff " << rat_str(c);
    }
    std::cout << "\n";
  }
  std::cout << "scanned " << rep.entries.size() << " partitions up to weight "
            << rep.maxWeight << " at cap " << rep.cap << ": "
            << (rep.pass ? "all alternating" : "violations found") << "\n";
  if (!rep.pass) std::cerr << "verification failure: sign violation\n";
  return rep.pass ? 0 : kMathFail;
}

int run_cross(const std::string& suite, int jobs, int cap) {
  std::vector<std::string> names;
  if (suite == "all")
    names = cross_check_suite_names();
  else
    names.push_back(suite);
  bool ok = true;
  for (const std::string& name : names) {
    SuiteResult r = run_cross_check(name, jobs, cap);
    std::cout << "suite " << r.name << ": "
              << (r.pass ? "ok" : "FAILED") << " (" << r.comparisons
              << " comparisons)\n";
    for (const std::string& w : r.witnesses) std::cout << "  " << w << "\n";
    ok = ok && r.pass;
  }
  if (!ok) std::cerr << "verification failure: see suite report\n";
  return ok ? 0 : kMathFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant characteristic classes of matrix Schubert "
               "cells"};
  app.require_subcommand(1);

  // weight ------------------------------------------------------------
  auto* wcmd = app.add_subcommand("weight", "symmetrized weight function");
  CellFlags wf;
  std::string wfmt;
  add_cell_flags(wcmd, wf);
  add_format_flag(wcmd, wfmt);

  // csm-cell ----------------------------------------------------------
  auto* ccmd = app.add_subcommand("csm-cell", "CSM class of a cell");
  CellFlags cf;
  std::string cfmt;
  bool cbeta0 = false, cschur = false;
  add_cell_flags(ccmd, cf);
  add_format_flag(ccmd, cfmt);
  ccmd->add_flag("--beta0", cbeta0, "set all b variables to zero");
  ccmd->add_flag("--schur", cschur,
                 "emit the Schur-basis expansion (implies --beta0)");

  // ssm-cell ----------------------------------------------------------
  auto* scmd = app.add_subcommand("ssm-cell", "SSM class of a cell");
  CellFlags sf;
  std::string sfmt;
  bool sbeta0 = false, sschur = false;
  int scap = 10;
  add_cell_flags(scmd, sf);
  add_format_flag(scmd, sfmt);
  add_cap_flag(scmd, scap);
  scmd->add_flag("--beta0", sbeta0, "set all b variables to zero");
  scmd->add_flag("--schur", sschur,
                 "emit the Schur-basis expansion (implies --beta0)");

  // tssm ----------------------------------------------------------------
  auto* tcmd = app.add_subcommand("tssm", "stable SSM building-block series");
  std::string tlambda, tfmt;
  int tcap = 10;
  tcmd->add_option("--lambda", tlambda, "partition, e.g. 3,1")->required();
  add_format_flag(tcmd, tfmt);
  add_cap_flag(tcmd, tcap);

  // sigma ---------------------------------------------------------------
  auto* gcmd = app.add_subcommand("sigma", "SSM class of a rank-r locus");
  int gk = 0, gn = 0, gr = 0, gcap = 10;
  std::string gmethod, gfmt;
  bool gschur = false;
  gcmd->add_option("--k", gk, "rows")->required();
  gcmd->add_option("--n", gn, "columns")->required();
  gcmd->add_option("--r", gr, "rank of the locus")->required();
  gcmd->add_option("--method", gmethod, "tssm | sieve")
      ->check(CLI::IsMember({"tssm", "sieve"}))
      ->default_val("tssm");
  gcmd->add_flag("--schur", gschur,
                 "emit the Schur-basis sum (method tssm only)");
  add_format_flag(gcmd, gfmt);
  add_cap_flag(gcmd, gcap);

  // phi -----------------------------------------------------------------
  auto* pcmd = app.add_subcommand("phi", "resolution-pushforward class");
  int ps = 0, pk = 0, pn = 0, pcap = 10;
  std::string pmethod, pfmt;
  bool pschur = false;
  pcmd->add_option("--s", ps, "resolution rank")->required();
  pcmd->add_option("--k", pk, "rows")->required();
  pcmd->add_option("--n", pn, "columns")->required();
  pcmd->add_option("--method", pmethod, "sss | det | loc")
      ->check(CLI::IsMember({"sss", "det", "loc"}))
      ->default_val("det");
  pcmd->add_flag("--schur", pschur,
                 "emit the Schur-basis expansion (methods sss, det)");
  add_format_flag(pcmd, pfmt);
  add_cap_flag(pcmd, pcap);

  // verify-axioms ---------------------------------------------------------
  auto* vcmd = app.add_subcommand("verify-axioms",
                                  "interpolation axioms of the weight family");
  int vk = 0, vn = 0, vperturb = 0;
  unsigned vseed = 12345;
  vcmd->add_option("--k", vk, "rows")->required();
  vcmd->add_option("--n", vn, "columns")->required();
  vcmd->add_option("--perturb", vperturb,
                   "rounds of e(V)-perturbation fault injection");
  vcmd->add_option("--seed", vseed, "perturbation RNG seed");

  // scan-alternating -------------------------------------------------------
  auto* acmd =
      app.add_subcommand("scan-alternating", "alternating-sign conjecture scan");
  int amax = 5, acap = 10, ajobs = 1;
  acmd->add_option("--max-weight", amax, "scan all |lambda| up to this weight");
  add_cap_flag(acmd, acap);
  acmd->add_option("--jobs", ajobs, "worker threads");

  // cross-check -------------------------------------------------------------
  auto* xcmd = app.add_subcommand("cross-check", "route-equivalence suites");
  std::string xsuite;
  int xjobs = 1, xcap = -1;
  std::vector<std::string> allowed = cross_check_suite_names();
  allowed.push_back("all");
  xcmd->add_option("--suite", xsuite, "suite name or 'all'")
      ->check(CLI::IsMember(allowed))
      ->required();
  xcmd->add_option("--jobs", xjobs, "worker threads");
  xcmd->add_option("--cap", xcap, "override the per-suite default cap")
      ->envname("SSM_KIT_CAP");

  try {
    app.parse(argc, argv);

    if (*wcmd) {
      emit_poly(weight_function(resolve_cell(wcmd, wf)), wfmt);
    } else if (*ccmd) {
      ColumnSet I = resolve_cell(ccmd, cf);
      if (cschur) {
        RationalSeriesExpr expr = fcsm_expr(lambda_of_set(I), I.k, I.n);
        int deg = std::max(0, expr.num.degree());
        emit_schur(schur_series_from_zpoly(expr.num, deg), cfmt);
      } else if (cbeta0) {
        emit_poly(csm_cell_beta0(I).poly, cfmt);
      } else {
        emit_poly(csm_cell(I).poly, cfmt);
      }
    } else if (*scmd) {
      require_positive_cap(scap);
      ColumnSet I = resolve_cell(scmd, sf);
      int codim = cell_geometry(I).codim();
      if (scap < codim)
        throw arg_error("--cap: " + std::to_string(scap) +
                        " is below the cell codimension " +
                        std::to_string(codim));
      if (sschur) {
        emit_schur(
            schur_via_genfun(lambda_of_set(I), I.k, I.n, ClassKind::SSM, scap),
            sfmt);
      } else if (sbeta0) {
        emit_poly(ssm_cell_beta0(I, scap).series.p, sfmt);
      } else {
        emit_poly(ssm_cell(I, scap).series.p, sfmt);
      }
    } else if (*tcmd) {
      require_positive_cap(tcap);
      emit_schur(tssm(parse_partition(tlambda, "--lambda"), tcap).series,
                 tfmt);
    } else if (*gcmd) {
      require_positive_cap(gcap);
      if (gk < 1) throw arg_error("--k: must be at least 1");
      if (gn < gk) throw arg_error("--n: must be at least k");
      if (gr < 0 || gr > gk) throw arg_error("--r: must satisfy 0 <= r <= k");
      if (gmethod == "tssm") {
        SigmaClass sc = ssm_sigma_tssm(gk, gn, gr, gcap);
        if (gschur)
          emit_schur(sc.schur, gfmt);
        else
          emit_poly(sc.value.p, gfmt);
      } else {
        if (gschur)
          throw arg_error("--schur: only available with --method tssm");
        emit_poly(ssm_sigma_sieve(gk, gn, gr, gcap).p, gfmt);
      }
    } else if (*pcmd) {
      require_positive_cap(pcap);
      if (pk < 1) throw arg_error("--k: must be at least 1");
      if (pn < pk) throw arg_error("--n: must be at least k");
      if (ps < 1 || ps > pk) throw arg_error("--s: must satisfy 1 <= s <= k");
      PhiMethod m = pmethod == "sss"   ? PhiMethod::SSS
                    : pmethod == "loc" ? PhiMethod::Localization
                                       : PhiMethod::Determinant;
      if (pschur && m == PhiMethod::Localization)
        throw arg_error("--schur: not available with --method loc");
      PhiClass pc = phi_class(ps, pk, pn, pcap, m);
      if (pschur)
        emit_schur(pc.schur, pfmt);
      else
        emit_poly(pc.value.p, pfmt);
    } else if (*vcmd) {
      if (vk < 1) throw arg_error("--k: must be at least 1");
      if (vn < 1) throw arg_error("--n: must be at least 1");
      if (vperturb < 0) throw arg_error("--perturb: must be nonnegative");
      return run_verify_axioms(vk, vn, vperturb, vseed);
    } else if (*acmd) {
      require_positive_cap(acap);
      if (amax < 0) throw arg_error("--max-weight: must be nonnegative");
      if (ajobs < 1) throw arg_error("--jobs: must be at least 1");
      return run_scan(amax, acap, ajobs);
    } else if (*xcmd) {
      if (xjobs < 1) throw arg_error("--jobs: must be at least 1");
      if (xcmd->count("--cap") > 0 && xcap < 1)
        throw arg_error("--cap: must be at least 1");
      return run_cross(xsuite, xjobs, xcmd->count("--cap") ? xcap : -1);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kUsage;
  } catch (const arg_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const math_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kMathFail;
  }
}
