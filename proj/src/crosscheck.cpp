#include "ssmkit/crosscheck.hpp"

#include <atomic>
#include <functional>
#include <optional>
#include <thread>

#include "ssmkit/a2pp.hpp"
#include "ssmkit/cells.hpp"
#include "ssmkit/genfun.hpp"
#include "ssmkit/weightfn.hpp"

namespace ssmkit {

namespace {

struct Check {
  std::string label;
  std::function<std::optional<std::string>()> fn;
};

SuiteResult run_checks(const std::string& name, std::vector<Check> checks,
                       int jobs) {
  SuiteResult res;
  res.name = name;
  res.comparisons = static_cast<int>(checks.size());
  std::vector<std::optional<std::string>> slots(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      try {
        slots[i] = checks[i].fn();
      } catch (const std::exception& e) {
        slots[i] = std::string("exception: ") + e.what();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < checks.size(); ++i)
    if (slots[i]) {
      res.pass = false;
      res.witnesses.push_back(checks[i].label + ": " + *slots[i]);
    }
  return res;
}

std::string tag(const ColumnSet& I) {
  return "k=" + std::to_string(I.k) + " n=" + std::to_string(I.n) +
         " I=" + I.str();
}

// SSM of the cell at beta = 0, valid through `cap` even when the cap sits
// below the cell codimension (the gated entry point refuses that case).
MultiPoly ssm_beta0_truncated(const ColumnSet& I, int cap) {
  int codim = cell_geometry(I).codim();
  return truncate(ssm_cell_beta0(I, std::max(cap, codim)).series.p, cap);
}

std::vector<Check> suite_wres() {
  std::vector<Check> cs;
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 4; ++n)
      for (const ColumnSet& I : enumerate_orbits(k, n))
        cs.push_back({"wres " + tag(I), [I]() -> std::optional<std::string> {
                        MultiPoly a = weight_function_beta0(I);
                        MultiPoly b = weight_function_residue_beta0(I);
                        if (a == b) return std::nullopt;
                        return "symmetrization " + to_text(a) +
                               " != residue " + to_text(b);
                      }});
  return cs;
}

std::vector<Check> suite_genfun(int cap) {
  std::vector<Check> cs;
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 4; ++n)
      for (const ColumnSet& I : enumerate_orbits(k, n)) {
        cs.push_back({"genfun csm " + tag(I),
                      [I, cap]() -> std::optional<std::string> {
                        MultiPoly a = truncate(csm_cell_beta0(I).poly, cap);
                        MultiPoly b =
                            class_via_genfun(lambda_of_set(I), I.k, I.n,
                                             ClassKind::CSM, cap)
                                .p;
                        if (a == b) return std::nullopt;
                        return "weightfn " + to_text(a) + " != genfun " +
                               to_text(b);
                      }});
        cs.push_back({"genfun ssm " + tag(I),
                      [I, cap]() -> std::optional<std::string> {
                        MultiPoly a = ssm_beta0_truncated(I, cap);
                        MultiPoly b =
                            class_via_genfun(lambda_of_set(I), I.k, I.n,
                                             ClassKind::SSM, cap)
                                .p;
                        if (a == b) return std::nullopt;
                        return "weightfn " + to_text(a) + " != genfun " +
                               to_text(b);
                      }});
      }
  return cs;
}

std::vector<Check> suite_lambda_sum(int cap) {
  std::vector<Check> cs;
  for (int n = 2; n <= 4; ++n)
    for (const ColumnSet& I : enumerate_orbits(2, n))
      cs.push_back({"lambda-sum " + tag(I),
                    [I, cap]() -> std::optional<std::string> {
                      MultiPoly a = ssm_beta0_truncated(I, cap);
                      MultiPoly b = ssm_orbit_tssm_expansion(I, cap).value.p;
                      if (a == b) return std::nullopt;
                      return "direct " + to_text(a) + " != tssm-sum " +
                             to_text(b);
                    }});
  return cs;
}

std::vector<Check> suite_sigma_sieve(int cap) {
  std::vector<Check> cs;
  for (int k = 1; k <= 2; ++k)
    for (int n = k; n <= 3; ++n)
      for (int r = 0; r <= k; ++r) {
        std::string label = "sigma-sieve k=" + std::to_string(k) +
                            " n=" + std::to_string(n) +
                            " r=" + std::to_string(r);
        cs.push_back({label, [k, n, r, cap]() -> std::optional<std::string> {
                        MultiPoly a = ssm_sigma_tssm(k, n, r, cap).value.p;
                        MultiPoly b = ssm_sigma_sieve(k, n, r, cap).p;
                        if (a == b) return std::nullopt;
                        return "tssm route " + to_text(a) + " != sieve " +
                               to_text(b);
                      }});
      }
  return cs;
}

std::vector<Check> suite_phi(int cap) {
  std::vector<Check> cs;
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 4; ++n)
      for (int s = 1; s <= k; ++s) {
        std::string label = "phi s=" + std::to_string(s) +
                            " k=" + std::to_string(k) +
                            " n=" + std::to_string(n);
        cs.push_back({label, [s, k, n, cap]() -> std::optional<std::string> {
                        MultiPoly a =
                            phi_class(s, k, n, cap, PhiMethod::SSS).value.p;
                        MultiPoly b =
                            phi_class(s, k, n, cap, PhiMethod::Determinant)
                                .value.p;
                        MultiPoly c =
                            phi_class(s, k, n, cap, PhiMethod::Localization)
                                .value.p;
                        if (!(a == b))
                          return "sss " + to_text(a) + " != det " + to_text(b);
                        if (!(b == c))
                          return "det " + to_text(b) + " != loc " + to_text(c);
                        return std::nullopt;
                      }});
      }
  return cs;
}

}  // namespace

const std::vector<std::string>& cross_check_suite_names() {
  static const std::vector<std::string> names = {
      "wres", "genfun", "lambda-sum", "sigma-sieve", "phi"};
  return names;
}

SuiteResult run_cross_check(const std::string& name, int jobs,
                            int capOverride) {
  auto pick = [&](int dflt) { return capOverride < 0 ? dflt : capOverride; };
  if (name == "wres") return run_checks(name, suite_wres(), jobs);
  if (name == "genfun") return run_checks(name, suite_genfun(pick(8)), jobs);
  if (name == "lambda-sum")
    return run_checks(name, suite_lambda_sum(pick(7)), jobs);
  if (name == "sigma-sieve")
    return run_checks(name, suite_sigma_sieve(pick(6)), jobs);
  if (name == "phi") return run_checks(name, suite_phi(pick(6)), jobs);
  throw arg_error("cross-check: unknown suite '" + name + "'");
}

}  // namespace ssmkit
