#pragma once

#include <string>
#include <vector>

#include "polyreg/regulator.hpp"
#include "polyreg/report.hpp"

namespace polyreg {

struct SuiteOptions {
  unsigned long seed = 7;
  double tol = 1e-6;          // chain and top checks
  double polylog_tol = 1e-8;  // polylog identities
  double fd_tol = 1e-5;       // differential equation vs finite differences
  int samples = 20;
  int precision_bits = 53;
  int max_k = 40;
  int max_p = 40;
  int max_n = 30;
  int max_m = 50;
  std::vector<double> loop_radii{1e-2, 3e-3, 1e-3};
  int loop_nodes = 256;
  std::string golden_dir;  // empty: compiled-in data/golden

  RegulatorConfig regulator() const;
};

// beta-values, verify-identities, sv-polylog-values, polylog-symmetries,
// dpolylog, form-invariants, residue, golden, chain-check, top-check, loop-check.
const std::vector<std::string>& suite_names();

Report run_suite(const std::string& name, const SuiteOptions& opt);

// Every suite; {"suite": "all", "reports": [...], "pass": bool}. Suites run
// concurrently; the output does not depend on scheduling.
nlohmann::json run_all(const SuiteOptions& opt);

// The elements used by the chain-check suite: every shape {f}_p ⊗ Λ^q with
// p >= 2, p + q = N for 3 <= N <= 6, in one and two variables (three when
// d r(e) is a 5-form).
std::vector<std::string> chain_check_elements();

// Function families for the top-check suite (three each for n = 2, 3, 4).
std::vector<std::vector<std::string>> top_check_families();

}  // namespace polyreg
