#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "polyreg/error.hpp"
#include "polyreg/form.hpp"
#include "polyreg/polylog.hpp"

namespace polyreg {

namespace {

// Per-call caches: each function is evaluated once per point, each
// polylogarithm argument once for all indices.
class Evaluator {
 public:
  Evaluator(const EvalPoint& at, const std::vector<std::vector<cplx>>& vectors, const EvalOptions& opt)
      : at_(at), vectors_(vectors), opt_(opt) {
    for (auto& v : vectors)
      if (v.size() != at.x.size()) fail(ErrorKind::InvalidArgument, "tangent vector length does not match the point");
  }

  struct FnData {
    cplx value;
    std::vector<cplx> dlog;  // Dg(v_j) / g for every vector
  };

  const FnData& fn(const RationalFunction& g) {
    const std::string key = g.to_string();
    auto it = fns_.find(key);
    if (it != fns_.end()) return it->second;
    FnData d;
    d.value = g.eval(at_.variables, at_.x, opt_.pole_threshold);
    if (d.value == 0.0) fail(ErrorKind::Domain, "non-generic point: " + key + " vanishes");
    for (auto& v : vectors_) {
      cplx val, der;
      g.eval_with_derivative(at_.variables, at_.x, v, val, der, opt_.pole_threshold);
      d.dlog.push_back(der / val);
    }
    return fns_.emplace(key, std::move(d)).first->second;
  }

  cplx scalar(const Scalar& s) {
    if (s.kind == Scalar::Kind::LogAbs) return std::log(std::abs(fn(s.f).value));
    const std::string key = s.f.to_string();
    auto it = polylogs_.find(key);
    if (it == polylogs_.end() || static_cast<int>(it->second.size()) < s.p) {
      const cplx z = s.f.is_constant() ? cplx(s.f.constant_value().to_double(), 0.0) : fn(s.f).value;
      PolylogOptions po;
      po.precision_bits = opt_.precision_bits;
      // a few extra indices so later factors of the same argument hit the cache
      it = polylogs_.insert_or_assign(key, sv_polylog_all(std::max(s.p, 6), z, po)).first;
    }
    return it->second[static_cast<std::size_t>(s.p - 1)];
  }

  cplx covector(const Generator& g, std::size_t j) {
    const cplx w = fn(g.g).dlog[j];
    return g.kind == Generator::Kind::DLog ? cplx(w.real(), 0.0) : cplx(0.0, w.imag());
  }

 private:
  const EvalPoint& at_;
  const std::vector<std::vector<cplx>>& vectors_;
  const EvalOptions& opt_;
  std::unordered_map<std::string, FnData> fns_;
  std::unordered_map<std::string, std::vector<cplx>> polylogs_;
};

cplx determinant(std::vector<cplx> a, std::size_t n) {
  cplx det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const cplx f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

double norm(const std::vector<cplx>& x) {
  double s = 0;
  for (auto v : x) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace

cplx evaluate(const Form& a, const EvalPoint& at, const std::vector<std::vector<cplx>>& vectors,
              const EvalOptions& opt) {
  if (at.variables.size() != at.x.size()) fail(ErrorKind::InvalidArgument, "point coordinates and names differ in length");
  if (!a.is_zero() && static_cast<int>(vectors.size()) != a.degree())
    fail(ErrorKind::InvalidArgument, "a " + std::to_string(a.degree()) + "-form needs " + std::to_string(a.degree()) +
                                         " vectors, got " + std::to_string(vectors.size()));
  Evaluator ev(at, vectors, opt);
  const std::size_t n = vectors.size();
  cplx total = 0.0;
  for (auto& [m, c] : a.terms()) {
    cplx s = c.to_double();
    for (auto& [sc, k] : m.scalars) {
      const cplx v = ev.scalar(sc);
      for (int i = 0; i < k; ++i) s *= v;
    }
    if (n > 0) {
      std::vector<cplx> mat(n * n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) mat[r * n + j] = ev.covector(m.generators[r], j);
      s *= determinant(std::move(mat), n);
    }
    total += s;
  }
  if (!std::isfinite(total.real()) || !std::isfinite(total.imag()))
    fail(ErrorKind::Domain, "non-finite form value (non-generic point)");
  return total;
}

cplx numeric_d(const Form& a, const EvalPoint& at, const std::vector<std::vector<cplx>>& vectors, double step,
               const EvalOptions& opt) {
  if (static_cast<int>(vectors.size()) != a.degree() + 1)
    fail(ErrorKind::InvalidArgument, "numeric_d of a " + std::to_string(a.degree()) + "-form needs " +
                                         std::to_string(a.degree() + 1) + " vectors");
  const double h = step * (1.0 + norm(at.x));
  cplx total = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    std::vector<std::vector<cplx>> rest;
    for (std::size_t j = 0; j < vectors.size(); ++j)
      if (j != i) rest.push_back(vectors[j]);
    EvalPoint plus = at, minus = at;
    for (std::size_t k = 0; k < at.x.size(); ++k) {
      plus.x[k] += h * vectors[i][k];
      minus.x[k] -= h * vectors[i][k];
    }
    const cplx diff = (evaluate(a, plus, rest, opt) - evaluate(a, minus, rest, opt)) / (2.0 * h);
    total += (i % 2 == 0) ? diff : -diff;
  }
  return total;
}

GenericPointSampler::GenericPointSampler(std::vector<std::string> variables, std::vector<RationalFunction> functions,
                                         unsigned long seed, double radius)
    : vars_(std::move(variables)), fns_(std::move(functions)), rng_(seed), radius_(radius) {}

double GenericPointSampler::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

EvalPoint GenericPointSampler::next() {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    EvalPoint p{vars_, {}};
    for (std::size_t j = 0; j < vars_.size(); ++j) {
      const double re = radius_ * (2 * uniform() - 1), im = radius_ * (2 * uniform() - 1);
      p.x.emplace_back(re, im);
    }
    bool ok = true;
    for (auto& f : fns_) {
      try {
        const double m = std::abs(f.eval(vars_, p.x));
        if (m < 1e-3 || m > 1e3) ok = false;
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) return p;
  }
  fail(ErrorKind::Convergence, "no generic sample point found");
}

std::vector<cplx> GenericPointSampler::random_vector() {
  std::vector<cplx> v;
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    const double re = 2 * uniform() - 1, im = 2 * uniform() - 1;
    v.emplace_back(re, im);
  }
  return v;
}

}  // namespace polyreg
