#include "polyreg/bernoulli.hpp"

#include <memory>
#include <mutex>
#include <sstream>

#include "polyreg/error.hpp"

namespace polyreg {

namespace {

// (e^{2t} - 1) * sum beta_k t^k = 2t. Comparing coefficients of t^{n+1}:
//   sum_{j=1}^{n+1} 2^j / j! * beta_{n+1-j} = [n == 0] * 2
std::vector<Rational> scaled_bernoulli(int count) {
  std::vector<Rational> b(count);
  std::vector<Rational> exp_coeff(count + 2);  // 2^j / j!
  for (int j = 0; j < count + 2; ++j)
    exp_coeff[j] = Rational(Integer(1) << j, factorial(static_cast<unsigned>(j)));
  for (int n = 0; n < count; ++n) {
    Rational acc = n == 0 ? Rational(2) : Rational(0);
    for (int j = 2; j <= n + 1; ++j) acc -= exp_coeff[j] * b[n + 1 - j];
    b[n] = acc / exp_coeff[1];
  }
  return b;
}

}  // namespace

BetaTable::BetaTable(int max_k, int max_p) : max_k_(max_k), max_p_(max_p) {
  if (max_k < 0 || max_p < 1) fail(ErrorKind::InvalidArgument, "BetaTable needs max_k >= 0, max_p >= 1");
  // The recursion for beta_{k,p} reaches k + p - 1 in the first index.
  beta_ = scaled_bernoulli(max_k + max_p + 2);

  const std::size_t rows = static_cast<std::size_t>(max_k + 1);
  closed_.assign(rows * static_cast<std::size_t>(max_p), Rational());
  for (int k = 0; k <= max_k; ++k) {
    for (int p = 1; p <= max_p; ++p) {
      Rational sum;
      for (int i = 0; 2 * i <= p - 1; ++i)
        sum += beta_[k + p - 2 * i] / Rational(factorial(static_cast<unsigned>(2 * i + 1)));
      Rational scale(factorial(static_cast<unsigned>(p - 1)));
      if (p % 2 == 1) scale = -scale;
      closed_[index(k, p)] = scale * sum;
    }
  }

  // Recursive route: a square "staircase" of width max_k + max_p in k, so that
  // every (k, p) with k <= max_k is reachable from p = 1.
  const int width = max_k + max_p;
  std::vector<std::vector<Rational>> rec(static_cast<std::size_t>(max_p) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(width) + 1));
  for (int k = 0; k <= width; ++k) rec[1][k] = -beta_[k + 1];
  for (int p = 2; p <= max_p; ++p) {
    for (int k = 0; k + p <= width + 1 && k <= width - 1; ++k) {
      if (p % 2 == 0) {
        // (2q - 1) beta_{k+1, 2q-1} = -beta_{k, 2q}
        rec[p][k] = -Rational(p - 1) * rec[p - 1][k + 1];
      } else {
        // 2q beta_{k+1, 2q} = -beta_{k, 2q+1} - beta_{k+1} / (2q + 1)
        const int q = (p - 1) / 2;
        rec[p][k] = -Rational(2 * q) * rec[p - 1][k + 1] - beta_[k + 1] / Rational(2 * q + 1);
      }
    }
  }
  recursive_.assign(rows * static_cast<std::size_t>(max_p), Rational());
  for (int k = 0; k <= max_k; ++k)
    for (int p = 1; p <= max_p; ++p) recursive_[index(k, p)] = rec[p][k];
}

std::size_t BetaTable::index(int k, int p) const {
  if (k < 0 || k > max_k_ || p < 1 || p > max_p_)
    fail(ErrorKind::InvalidArgument, "beta_{k,p} index out of table range");
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(max_p_) + static_cast<std::size_t>(p - 1);
}

const Rational& BetaTable::beta(int k) const {
  if (k < 0 || k >= static_cast<int>(beta_.size())) fail(ErrorKind::InvalidArgument, "beta index out of table range");
  return beta_[static_cast<std::size_t>(k)];
}

const Rational& BetaTable::beta_kp(int k, int p) const { return closed_[index(k, p)]; }
const Rational& BetaTable::beta_kp_recursive(int k, int p) const { return recursive_[index(k, p)]; }

const BetaTable& default_beta_table() {
  static const BetaTable table(64, 64);
  return table;
}

namespace {

const BetaTable& table_for(int k, int p) {
  const BetaTable& def = default_beta_table();
  if (k <= def.max_k() && p <= def.max_p()) return def;
  // Larger requests are rare (CLI tables); cache the largest one built so far.
  static std::mutex mu;
  static std::shared_ptr<const BetaTable> big;
  std::lock_guard<std::mutex> lock(mu);
  if (!big || big->max_k() < k || big->max_p() < p)
    big = std::make_shared<const BetaTable>(std::max(k, def.max_k()), std::max(p, def.max_p()));
  return *big;
}

}  // namespace

Rational beta(int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "beta(k) needs k >= 0");
  return table_for(k, 1).beta(k);
}

Rational bernoulli(int k) {
  return beta(k) * Rational(factorial(static_cast<unsigned>(k))) / Rational(Integer(Integer(1) << k));
}

Rational beta_kp(int k, int p) {
  if (k < 0 || p < 1) fail(ErrorKind::InvalidArgument, "beta_{k,p} needs k >= 0, p >= 1");
  return table_for(k, p).beta_kp(k, p);
}

Rational beta_kp_recursive(int k, int p) {
  if (k < 0 || p < 1) fail(ErrorKind::InvalidArgument, "beta_{k,p} needs k >= 0, p >= 1");
  return table_for(k, p).beta_kp_recursive(k, p);
}

Rational beta_from_bernoulli_recurrence(int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "beta(k) needs k >= 0");
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, B_0 = 1 (gives B_1 = -1/2).
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = Rational(1);
  for (int n = 1; n <= k; ++n) {
    Rational acc;
    for (int j = 0; j < n; ++j) acc += Rational(binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(j))) * b[j];
    b[n] = -acc / Rational(n + 1);
  }
  return b[k] * Rational(Integer(Integer(1) << k)) / Rational(factorial(static_cast<unsigned>(k)));
}

Rational proposition_lhs(int n, int p, int coeff_shift) {
  const BetaTable& t = table_for(n + 1, p + 1);
  Rational v = t.beta_kp(n - 2, p + 1) - Rational(n + coeff_shift) * t.beta_kp(n - 1, p);
  for (int k = 1; k <= n - 3; ++k) v -= t.beta_kp(k, p) * t.beta(n - k - 1);
  return v;
}

Rational quadratic_lhs(int n, int lo, int hi_gap, int coeff_shift) {
  const BetaTable& t = table_for(n, 1);
  Rational v = Rational(n + coeff_shift) * t.beta(n);
  for (int i = lo; i <= n - hi_gap; ++i) v += t.beta(i) * t.beta(n - i);
  return v;
}

namespace {

CaseResult exact_case(std::string input, bool ok, nlohmann::json details = nlohmann::json::object()) {
  CaseResult c;
  c.input = std::move(input);
  c.pass = ok;
  c.max_defect = ok ? 0.0 : 1.0;
  c.tol = 0.0;
  c.details = std::move(details);
  return c;
}

}  // namespace

Report verify_radema(int max_m) {
  if (max_m < 1) fail(ErrorKind::InvalidArgument, "verify_radema needs max_m >= 1");
  const BetaTable& t = table_for(1, 2 * max_m + 1);
  Report r;
  r.suite = "beta-grid";
  struct Probe {
    const char* name;
    bool ok = true;
    nlohmann::json first_failure;
  };
  Probe p0e{"beta_{0,2m} = 1/(2m+1)", true, {}}, p0o{"beta_{0,2m+1} = 1/(2m+1)", true, {}},
      p1e{"beta_{1,2m} = 0", true, {}}, p1o{"|beta_{1,2m-1}| = 1/((2m-1)(2m+1))", true, {}};
  int negatives = 0, positives = 0;
  auto check = [](Probe& pr, int m, bool ok, const Rational& got) {
    if (!ok && pr.ok) {
      pr.ok = false;
      pr.first_failure = {{"m", m}, {"value", got.to_string()}};
    }
  };
  for (int m = 1; m <= max_m; ++m) {
    const Rational target(1, 2 * m + 1);
    check(p0e, m, t.beta_kp(0, 2 * m) == target, t.beta_kp(0, 2 * m));
    check(p0o, m, t.beta_kp(0, 2 * m + 1) == target, t.beta_kp(0, 2 * m + 1));
    check(p1e, m, t.beta_kp(1, 2 * m).is_zero(), t.beta_kp(1, 2 * m));
    const Rational& b = t.beta_kp(1, 2 * m - 1);
    check(p1o, m, b.abs() == Rational(1, (2 * m - 1) * (2 * m + 1)), b);
    (b.sign() < 0 ? negatives : positives) += 1;
  }
  const std::string range = ", 1<=m<=" + std::to_string(max_m);
  for (Probe* pr : {&p0e, &p0o, &p1e, &p1o}) {
    nlohmann::json d = nlohmann::json::object();
    if (!pr->ok) d["first_failure"] = pr->first_failure;
    r.add(exact_case(pr->name + range, pr->ok, d));
  }
  std::string sign = negatives == max_m ? "negative" : (positives == max_m ? "positive" : "mixed");
  r.notes["sign_beta_{1,2m-1}"] = sign;
  r.notes["sign_resolution"] =
      sign == "negative"
          ? "beta_{1,2m-1} = -1/((2m-1)(2m+1)); this is the sign used by the k=1 terms of the "
            "regulator ((2m-1) beta_{1,2m-1} = -1/(2m+1))"
          : "unexpected sign pattern";
  return r;
}

Report verify_recursions(int max_k, int max_p) {
  BetaTable t(max_k, max_p);
  Report r;
  r.suite = "beta-recursions";
  bool ok = true;
  nlohmann::json first;
  for (int k = 0; k <= max_k && ok; ++k)
    for (int p = 1; p <= max_p; ++p)
      if (t.beta_kp(k, p) != t.beta_kp_recursive(k, p)) {
        ok = false;
        first = {{"k", k}, {"p", p}, {"closed", t.beta_kp(k, p).to_string()},
                 {"recursive", t.beta_kp_recursive(k, p).to_string()}};
        break;
      }
  nlohmann::json d = nlohmann::json::object();
  if (!ok) d["first_failure"] = first;
  r.add(exact_case("closed form == recursions, k<=" + std::to_string(max_k) + ", p<=" + std::to_string(max_p), ok, d));

  bool betas_ok = true;
  const int kmax = std::min(max_k, 60);
  for (int k = 0; k <= kmax; ++k)
    if (t.beta(k) != beta_from_bernoulli_recurrence(k)) betas_ok = false;
  r.add(exact_case("beta_k convolution == 2^k B_k / k!, k<=" + std::to_string(kmax), betas_ok));

  bool odd_ok = true;
  for (int k = 1; 2 * k + 1 <= max_k + max_p; ++k)
    if (!t.beta(2 * k + 1).is_zero()) odd_ok = false;
  r.add(exact_case("beta_{2k+1} = 0 for k >= 1", odd_ok));
  return r;
}

Report verify_proposition(int max_n, int max_p) {
  if (max_n < 3 || max_p < 1) fail(ErrorKind::InvalidArgument, "verify_proposition needs max_n >= 3, max_p >= 1");
  Report r;
  r.suite = "proposition";
  const std::string grid = ", 3<=n<=" + std::to_string(max_n) + ", 1<=p<=" + std::to_string(max_p);

  // Linear identity: find every coefficient shift in {-2..+1} that holds on the grid.
  nlohmann::json shifts = nlohmann::json::object();
  nlohmann::json corrected_first = nullptr;
  for (int shift : {-2, -1, 0, 1}) {
    long failures = 0;
    nlohmann::json first = nullptr;
    for (int n = 3; n <= max_n; ++n)
      for (int p = 1; p <= max_p; ++p) {
        Rational v = proposition_lhs(n, p, shift);
        if (!v.is_zero()) {
          if (failures == 0) first = {{"n", n}, {"p", p}, {"value", v.to_string()}};
          ++failures;
        }
      }
    std::string label = shift == 0 ? "n" : (shift < 0 ? "n" + std::to_string(shift) : "n+" + std::to_string(shift));
    shifts[label] = {{"holds", failures == 0}, {"failures", failures}, {"first_counterexample", first}};
    if (shift == 0) corrected_first = first;
  }
  {
    nlohmann::json d = nlohmann::json::object();
    if (!corrected_first.is_null()) d["first_failure"] = corrected_first;
    r.add(exact_case("beta_{n-2,p+1} - n beta_{n-1,p} - sum_{k=1}^{n-3} beta_{k,p} beta_{n-k-1} = 0" + grid,
                     corrected_first.is_null(), d));
  }
  r.notes["linear_identity_coefficient_variants"] = shifts;
  r.notes["linear_identity_resolution"] =
      "the coefficient of beta_{n-1,p} that makes the identity exact is n; the displayed n-1 "
      "fails (its p=1 case equals the displayed quadratic identity, which is off by beta_n)";
  r.notes["quadratic_identity_resolution"] =
      "p=1 of the linear identity with coefficient n gives sum_{i=2}^{n-2} beta_i beta_{n-i} + (n+1) beta_n = 0; "
      "the same follows from t b' = b - b^2 - 2t b for b = 2t/(e^{2t}-1)";

  // Quadratic identity: bounds lo in {0,1,2}, hi in {n-2,n-1,n}, coefficient n-1, n, n+1.
  nlohmann::json variants = nlohmann::json::array();
  for (int lo = 0; lo <= 2; ++lo)
    for (int gap = 0; gap <= 2; ++gap)
      for (int shift = -1; shift <= 1; ++shift) {
        bool holds = true;
        for (int n = 4; n <= max_n && holds; ++n) holds = quadratic_lhs(n, lo, gap, shift).is_zero();
        if (holds) {
          std::string hi = gap == 0 ? "n" : "n-" + std::to_string(gap);
          std::string c = shift == 0 ? "n" : (shift < 0 ? "n-1" : "n+1");
          variants.push_back("sum_{i=" + std::to_string(lo) + "}^{" + hi + "} beta_i beta_{n-i} + (" + c + ") beta_n = 0");
        }
      }
  r.notes["quadratic_identity_variants_holding"] = variants;
  r.notes["quadratic_identity_printed"] = {
      {"statement", "sum_{i=2}^{n-2} beta_i beta_{n-i} + n beta_n = 0"},
      {"n=4 value", quadratic_lhs(4, 2, 2, 0).to_string()}};
  bool pinned = true;
  nlohmann::json first = nullptr;
  for (int n = 4; n <= max_n && pinned; ++n) {
    Rational v = quadratic_lhs(n, 2, 2, 1);
    if (!v.is_zero()) {
      pinned = false;
      first = {{"n", n}, {"value", v.to_string()}};
    }
  }
  nlohmann::json d = nlohmann::json::object();
  if (!pinned) d["first_failure"] = first;
  r.add(exact_case("sum_{i=2}^{n-2} beta_i beta_{n-i} + (n+1) beta_n = 0, 4<=n<=" + std::to_string(max_n), pinned, d));
  return r;
}

}  // namespace polyreg
