#pragma once

#include <string>
#include <vector>

#include "polyreg/report.hpp"

namespace polyreg {

// β_0 = 1, β_1 = -1, β_2 = 1/3, β_4 = -1/45, β_6 = 2/945 and β_odd = 0 beyond 1.
Report beta_values_check();

// "k\tp\tnumerator\tdenominator" rows of β_{k,p}, 0 <= k <= max_k, 1 <= p <= max_p;
// the p = 0 row of each k holds β_k itself.
std::string beta_table_tsv(int max_k, int max_p);
nlohmann::json beta_table_json(int max_k, int max_p);

// Special values against independent oracles: L^_2 on (0, 1), L^_2(i) against
// Catalan's constant, L^_3(1) against Apery's series; also at precision_bits.
Report polylog_values_check(int precision_bits, double tol);

// Symbolic d L^_n against central differences at generic points.
Report dpolylog_check(const std::vector<int>& ns, int points, unsigned long seed, double tol);

// Numeric form invariants: the (1-f, f) pair relations and d(d a) = 0 on
// random forms.
Report form_invariants_check(int samples, unsigned long seed, double tol);

}  // namespace polyreg
