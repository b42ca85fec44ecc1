// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// its budget. Exit status 0 iff every line passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "polyreg/bernoulli.hpp"
#include "polyreg/chain.hpp"
#include "polyreg/checks.hpp"
#include "polyreg/polylog.hpp"
#include "polyreg/suites.hpp"

using namespace polyreg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Worst case of a report, for the summary line.
std::string worst(const Report& r) {
  double d = 0;
  std::string at;
  for (auto& c : r.cases)
    if (!c.pass || c.max_defect > d) {
      if (!c.pass) return "failed: " + c.input;
      d = c.max_defect;
      at = c.input;
    }
  return std::to_string(r.cases.size()) + " cases, max defect " + format_double(d);
}

Outcome from(const Report& r) { return {r.pass(), worst(r)}; }

bool all_cases(const Report& r, double tol) {
  for (auto& c : r.cases)
    if (!(c.pass && c.max_defect < tol)) return false;
  return !r.cases.empty();
}

bool exact(const std::vector<std::pair<int, Rational>>& want) {
  for (auto& [k, v] : want)
    if (beta(k) != v) return false;
  return true;
}

}  // namespace

int main() {
  SuiteOptions opt;  // seed 7, tolerances 1e-6 / 1e-8 / 1e-5
  int failures = 0;
  Report chain;  // shared by criteria 7 and 11

  const std::vector<std::tuple<int, const char*, double, std::function<Outcome()>>> criteria = {
      {1, "exact beta table", 1.0,
       [] {
         const Report r = beta_values_check();
         const bool ok = exact({{0, Rational(1)}, {1, Rational(-1)}, {2, Rational(1, 3)}, {4, Rational(-1, 45)},
                                {6, Rational(2, 945)}});
         return Outcome{ok && r.pass(), "beta_0..beta_6 exact, " + worst(r)};
       }},
      {2, "beta_{0,p}, beta_{1,p} grid m <= 50, recursions k, p <= 40", 5.0,
       [] {
         Report r = verify_radema(50);
         r.merge(verify_recursions(40, 40));
         return from(r);
       }},
      {3, "linear identity 3 <= n <= 30, 1 <= p <= 30; quadratic bounds pinned", 10.0,
       [] {
         const Report r = verify_proposition(30, 30);
         const bool pinned = r.notes.contains("quadratic_identity_resolution");
         return Outcome{r.pass() && pinned,
                        worst(r) + (pinned ? ", resolution: " + r.notes["quadratic_identity_resolution"].get<std::string>()
                                           : ", resolution missing")};
       }},
      {4, "single-valued polylog values, path independence, five-term", 30.0,
       [&] {
         Report r = polylog_values_check(128, 1e-8);
         r.merge(sv_polylog_check_symmetries(2, 25, 1e-8, opt.seed + 2));
         for (int n = 2; n <= 4; ++n) r.merge(sv_polylog_check_path_independence(n, 50, 1e-8, opt.seed + 100 + n));
         return from(r);
       }},
      {5, "d L^_n against finite differences, n = 3, 4, 5", 30.0,
       [&] {
         const Report r = dpolylog_check({3, 4, 5}, 20, opt.seed, 1e-5);
         return Outcome{all_cases(r, 1e-5), worst(r)};
       }},
      {6, "golden formulas", 5.0, [&] { return from(run_suite("golden", opt)); }},
      {7, "chain map d r = r delta, weights 3..6", 180.0,
       [&] {
         chain = run_suite("chain-check", opt);
         std::set<std::tuple<int, int, int>> shapes;  // (N, p, variables)
         double worst_defect = 0;
         bool ok = opt.samples >= 20 && opt.regulator().vector_tuples >= 3;
         for (auto& c : chain.cases) {
           ok = ok && c.max_defect < 1e-6;
           worst_defect = std::max(worst_defect, c.max_defect);
           const int N = c.details["weight"], q = c.details["form_degree"];
           shapes.insert({N, N - q, c.details["variables"].get<int>()});
         }
         bool covered = true;
         for (int N = 3; N <= 6; ++N)
           for (int p = 2; p < N; ++p)
             for (int v = 1; v <= 2; ++v) covered = covered && shapes.count({N, p, v});
         return Outcome{ok && covered, std::to_string(chain.cases.size()) + " elements, every shape in 1 and 2 variables " +
                                           (covered ? "covered" : "NOT covered") + ", max defect " +
                                           format_double(worst_defect)};
       }},
      {8, "top cycle d r_n(n) + pi_n(dlog ...) = 0, n = 2, 3, 4", 30.0,
       [&] {
         const Report r = run_suite("top-check", opt);
         return Outcome{all_cases(r, 1e-6) && top_check_families().size() >= 9, worst(r)};
       }},
      {9, "residue morphism: delta^2 = 0, single sign eps", 10.0,
       [&] {
         Report r = delta_squared_check(6, 100, opt.seed);
         r.merge(residue_chain_check(3, 20, opt.seed));
         return from(r);
       }},
      {10, "loop residues, both orientations", 60.0, [&] { return from(run_suite("loop-check", opt)); }},
      {11, "twist: values in i^(N-1) R within 1e-8 on the chain-map samples", 1.0,
       [&] {
         bool ok = !chain.cases.empty();
         double t = 0;
         for (auto& c : chain.cases) {
           ok = ok && c.details["twist_pass"].get<bool>() && c.details["twist_tol"].get<std::string>() == format_double(1e-8);
           t = std::max(t, std::stod(c.details["twist_defect"].get<std::string>()));
         }
         return Outcome{ok, std::to_string(chain.cases.size()) + " elements, max offending part " + format_double(t)};
       }},
  };

  for (auto& [id, title, budget, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < budget;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("criterion %2d %s: %s (%.2f s of %.0f s%s) %s\n", id, pass ? "PASS" : "FAIL", title, secs, budget,
                in_time ? "" : ", over budget", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
