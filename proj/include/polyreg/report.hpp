#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace polyreg {

// One checked case of a verification suite. Exact suites report
// max_defect = 0 on success and 1 on failure with tol = 0.
struct CaseResult {
  std::string input;
  double max_defect = 0.0;
  double tol = 0.0;
  bool pass = true;
  nlohmann::json details = nlohmann::json::object();
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;
  nlohmann::json notes = nlohmann::json::object();

  bool pass() const;
  void add(CaseResult c) { cases.push_back(std::move(c)); }
  // Cases of another suite are prefixed with its name; same-suite merges are not.
  void merge(const Report& other);

  // {suite, cases: [{input, max_defect, tol, pass, details?}], pass, notes?}
  // Cases are sorted by input so that assembly order never shows up.
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Text rendering of a report in its JSON form.
std::string report_text(const nlohmann::json& report);

// Stable number formatting used in every report (17 significant digits).
std::string format_double(double v);

}  // namespace polyreg
