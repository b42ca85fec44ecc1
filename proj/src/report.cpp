#include "polyreg/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace polyreg {

bool Report::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

void Report::merge(const Report& other) {
  for (const auto& c : other.cases) {
    CaseResult copy = c;
    if (other.suite != suite) copy.input = other.suite + ": " + c.input;
    cases.push_back(std::move(copy));
  }
  if (other.notes.empty()) return;
  if (other.suite == suite)
    notes.update(other.notes);
  else
    notes[other.suite] = other.notes;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json Report::to_json() const {
  std::vector<const CaseResult*> sorted;
  sorted.reserve(cases.size());
  for (const auto& c : cases) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CaseResult* a, const CaseResult* b) { return a->input < b->input; });
  nlohmann::json j;
  j["suite"] = suite;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto* c : sorted) {
    nlohmann::json cj;
    cj["input"] = c->input;
    cj["max_defect"] = c->max_defect;
    cj["tol"] = c->tol;
    cj["pass"] = c->pass;
    if (!c->details.empty()) cj["details"] = c->details;
    arr.push_back(std::move(cj));
  }
  j["cases"] = std::move(arr);
  j["pass"] = pass();
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::string report_text(const nlohmann::json& j) {
  std::ostringstream os;
  const bool pass = j.value("pass", false);
  os << "suite " << j.value("suite", std::string()) << ": " << (pass ? "PASS" : "FAIL") << " ("
     << j["cases"].size() << " cases)\n";
  for (const auto& c : j["cases"]) {
    os << "  [" << (c["pass"].get<bool>() ? "pass" : "FAIL") << "] "
       << c["input"].get<std::string>() << "  defect=" << format_double(c["max_defect"].get<double>())
       << " tol=" << format_double(c["tol"].get<double>()) << "\n";
    if (c.contains("details") && !c["pass"].get<bool>()) os << "      " << c["details"].dump() << "\n";
  }
  if (j.contains("notes")) os << "  notes: " << j["notes"].dump() << "\n";
  return os.str();
}

std::string Report::to_text() const { return report_text(to_json()); }

}  // namespace polyreg
