#pragma once

#include <cstddef>
#include <vector>

#include "polyreg/rational.hpp"
#include "polyreg/report.hpp"

namespace polyreg {

// Scaled Bernoulli numbers beta_k = 2^k B_k / k!, i.e. the Taylor coefficients
// of 2t / (e^{2t} - 1), and the combinations
//
//   beta_{k,p} = (-1)^p (p-1)! sum_{0 <= i <= (p-1)/2} beta_{k+p-2i} / (2i+1)!
//
// Convention: B_1 = -1/2 (forced by beta_1 = -1).
//
// A table is filled completely at construction and is read-only afterwards,
// so a const BetaTable can be shared between threads.
class BetaTable {
 public:
  BetaTable(int max_k = 64, int max_p = 64);

  int max_k() const { return max_k_; }
  int max_p() const { return max_p_; }

  // 0 <= k <= max_k + max_p
  const Rational& beta(int k) const;
  // 0 <= k <= max_k, 1 <= p <= max_p
  const Rational& beta_kp(int k, int p) const;
  const Rational& beta_kp_recursive(int k, int p) const;

 private:
  int max_k_;
  int max_p_;
  std::vector<Rational> beta_;
  std::vector<Rational> closed_;     // (max_k+1) x max_p, row-major in k
  std::vector<Rational> recursive_;  // same layout; built only from the recursions
  std::size_t index(int k, int p) const;
};

// Shared default table (64, 64); larger arguments are served by a one-off table.
const BetaTable& default_beta_table();

Rational beta(int k);
Rational bernoulli(int k);
Rational beta_kp(int k, int p);
Rational beta_kp_recursive(int k, int p);

// beta_k through B_k * 2^k / k!; second route for beta(k) used by tests.
Rational beta_from_bernoulli_recurrence(int k);

// beta_{0,2m} = beta_{0,2m+1} = 1/(2m+1), beta_{1,2m} = 0 and
// |beta_{1,2m-1}| = 1/((2m-1)(2m+1)) for 1 <= m <= max_m. The sign found for
// beta_{1,2m-1} is recorded in the notes.
Report verify_radema(int max_m);

// Closed form against the recursions for 0 <= k <= max_k, 1 <= p <= max_p.
Report verify_recursions(int max_k, int max_p);

// The linear identity
//   beta_{n-2,p+1} - c(n) beta_{n-1,p} - sum_{k=1}^{n-3} beta_{k,p} beta_{n-k-1} = 0
// and the quadratic identity sum_{i=lo}^{hi} beta_i beta_{n-i} + c beta_n = 0.
// Each case records which coefficient / bound variants hold identically.
Report verify_proposition(int max_n, int max_p);

// Left-hand side of the linear identity with coefficient `coeff_shift + n`
// in front of beta_{n-1,p} (printed: coeff_shift = -1).
Rational proposition_lhs(int n, int p, int coeff_shift);

// sum_{i=lo}^{n-hi_gap} beta_i beta_{n-i} + (n + coeff_shift) beta_n
Rational quadratic_lhs(int n, int lo, int hi_gap, int coeff_shift);

}  // namespace polyreg
