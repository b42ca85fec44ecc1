#pragma once

#include <string>
#include <vector>

#include "polyreg/report.hpp"

namespace polyreg {

// One transcribed formula: r_map(element) must equal expect (or -expect).
struct GoldenEntry {
  std::string name;
  std::string element;
  std::string expect;
  bool negated = false;
  std::string file;
};

// "key: value" records separated by blank lines; '#' starts a comment line,
// indented lines continue the previous value.
std::vector<GoldenEntry> parse_golden(const std::string& text, const std::string& file = "");
std::vector<GoldenEntry> load_golden_dir(const std::string& dir);

// Compiled-in location of data/golden.
std::string default_golden_dir();

// File transcriptions, the two families in n (m = 1, 2) and the depth-2
// family in m with coefficients 1/((2p+1)(2p+3)).
Report golden_formula_tests(const std::string& dir = default_golden_dir());

}  // namespace polyreg
