#include "polyreg/polylog.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "polyreg/bernoulli.hpp"
#include "polyreg/error.hpp"

namespace polyreg {

namespace mp = boost::multiprecision;
using HPReal = mp::mpfr_float;

namespace {

// Minimal complex arithmetic over an arbitrary real type; std::complex is only
// specified for the built-in floating types.
template <class R>
struct Cx {
  R re{0};
  R im{0};
  Cx() = default;
  Cx(R a, R b = R(0)) : re(std::move(a)), im(std::move(b)) {}
  Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
  Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
  Cx operator-() const { return {-re, -im}; }
  Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Cx operator*(const R& s) const { return {re * s, im * s}; }
  Cx operator/(const Cx& o) const {
    R d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Cx operator/(const R& s) const { return {re / s, im / s}; }
  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx times_i() const { return {-im, re}; }
};

template <class R>
R cabs(const Cx<R>& z) {
  using std::sqrt;
  return sqrt(z.re * z.re + z.im * z.im);
}

template <class R>
Cx<R> clog(const Cx<R>& z) {
  using std::atan2;
  using std::log;
  return {log(cabs(z)), atan2(z.im, z.re)};
}

template <class R>
R to_real(const Rational& q) {
  if constexpr (std::is_same_v<R, double>) {
    return q.to_double();
  } else {
    return R(q.numerator().get_str()) / R(q.denominator().get_str());
  }
}

template <class R>
R epsilon_for(int bits) {
  using std::pow;
  return pow(R(2), -bits);
}

template <class R>
Cx<R> project(int n, const Cx<R>& w) {
  return n % 2 == 1 ? Cx<R>(w.re, R(0)) : Cx<R>(R(0), w.im);
}

template <class R>
bool is_zero(const Cx<R>& z) {
  return z.re == 0 && z.im == 0;
}

template <class R>
Cx<R> li_series(int n, const Cx<R>& z, int bits) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "Li_n needs n >= 1");
  if (is_zero(z)) return {};
  const R eps = epsilon_for<R>(bits);
  Cx<R> sum;
  Cx<R> zk = z;
  for (long k = 1; k < 2000000; ++k) {
    using std::pow;
    Cx<R> term = zk / pow(R(k), n);
    sum += term;
    if (cabs(term) <= eps * cabs(sum)) return sum;
    zk = zk * z;
  }
  fail(ErrorKind::Convergence, "Li_n series did not converge");
}

// L^_1..L^_n at |z| <= 1/2 from the defining combination.
template <class R>
std::vector<Cx<R>> direct_all(int n, const Cx<R>& z, int bits) {
  std::vector<Cx<R>> out(static_cast<std::size_t>(n));
  if (is_zero(z)) return out;
  using std::log;
  std::vector<Cx<R>> li(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) li[m] = li_series(m, z, bits);
  const R lz = log(cabs(z));
  const BetaTable& bt = default_beta_table();
  for (int p = 1; p <= n; ++p) {
    Cx<R> s;
    R lzk(1);
    for (int k = 0; k <= p - 1; ++k) {
      if (!bt.beta(k).is_zero()) s += li[p - k] * (to_real<R>(bt.beta(k)) * lzk);
      lzk *= lz;
    }
    out[p - 1] = project(p, s);
  }
  return out;
}

// Eta-function route to zeta(n), n >= 2 (alternating series acceleration).
template <class R>
R zeta_value(int n, int bits) {
  using std::pow;
  using std::sqrt;
  const int terms = static_cast<int>(bits * 0.4) + 10;
  R d = pow(R(3) + sqrt(R(8)), terms);
  d = (d + R(1) / d) / 2;
  R b(-1), c = -d, s(0);
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    s += c / pow(R(k + 1), n);
    b = b * R(k + terms) * R(k - terms) / (R(2 * k + 1) / 2 * R(k + 1));
  }
  R eta = s / d;
  return eta / (R(1) - pow(R(2), 1 - n));
}

// Integration matrix on Chebyshev-Lobatto nodes s_j = cos(pi j / M):
// (Q f)_i approximates the integral of f from -1 (node M) to s_i.
template <class R>
std::vector<R> build_integration_matrix(int M) {
  using std::cos;
  const R pi = boost::math::constants::pi<R>();
  const int N = M + 1;
  // coefficient map: f values -> Chebyshev coefficients c_k
  std::vector<R> dct(static_cast<std::size_t>(N * N));
  for (int k = 0; k < N; ++k)
    for (int j = 0; j < N; ++j) {
      R w = (j == 0 || j == M) ? R(1) : R(2);
      R v = w * cos(pi * R(j) * R(k) / R(M)) / R(M);
      if (k == 0 || k == M) v /= 2;
      dct[static_cast<std::size_t>(k * N + j)] = v;
    }
  // antiderivative coefficients b (length N + 1) from c
  std::vector<R> integ(static_cast<std::size_t>((N + 1) * N), R(0));
  auto at = [&](int row, int col) -> R& { return integ[static_cast<std::size_t>(row * N + col)]; };
  at(1, 0) += R(1);
  if (M >= 1) {
    at(2, 1) += R(1) / 4;
    at(0, 1) += R(1) / 4;
  }
  for (int k = 2; k < N; ++k) {
    at(k + 1, k) += R(1) / R(2 * (k + 1));
    at(k - 1, k) -= R(1) / R(2 * (k - 1));
  }
  // fold the two coefficient maps, then evaluate at the nodes minus at s = -1
  std::vector<R> a(static_cast<std::size_t>((N + 1) * N), R(0));
  for (int r = 0; r <= N; ++r)
    for (int k = 0; k < N; ++k) {
      const R& g = integ[static_cast<std::size_t>(r * N + k)];
      if (g == 0) continue;
      for (int j = 0; j < N; ++j) a[static_cast<std::size_t>(r * N + j)] += g * dct[static_cast<std::size_t>(k * N + j)];
    }
  std::vector<R> q(static_cast<std::size_t>(N * N), R(0));
  for (int i = 0; i < N; ++i)
    for (int r = 0; r <= N; ++r) {
      const R ev = cos(pi * R(i) * R(r) / R(M)) - ((r % 2 == 0) ? R(1) : R(-1));
      for (int j = 0; j < N; ++j) q[static_cast<std::size_t>(i * N + j)] += ev * a[static_cast<std::size_t>(r * N + j)];
    }
  return q;
}

int nodes_for_bits(int bits) { return std::max(24, static_cast<int>(std::ceil(bits * 0.3934)) + 8); }

const std::vector<double>& double_matrix() {
  static const std::vector<double> q = build_integration_matrix<double>(nodes_for_bits(53));
  return q;
}

template <class R>
R point_segment_distance(const Cx<R>& p, const Cx<R>& a, const Cx<R>& b) {
  Cx<R> ab = b - a;
  Cx<R> ap = p - a;
  R len2 = ab.re * ab.re + ab.im * ab.im;
  R t = len2 == 0 ? R(0) : (ap.re * ab.re + ap.im * ab.im) / len2;
  if (t < 0) t = R(0);
  if (t > 1) t = R(1);
  Cx<R> c = a + ab * t;
  return cabs(p - c);
}

double dist01(cplx z) { return std::min(std::abs(z), std::abs(z - 1.0)); }

double segment_clearance(cplx a, cplx b) {
  Cx<double> A(a.real(), a.imag()), B(b.real(), b.imag());
  return std::min(point_segment_distance(Cx<double>(0, 0), A, B), point_segment_distance(Cx<double>(1, 0), A, B));
}

// Whole path base -> waypoints -> z admissible?
bool path_admissible(cplx z, const PathSpec& spec, const std::vector<cplx>& waypoints) {
  std::vector<cplx> pts;
  pts.push_back(spec.base_point);
  for (auto w : waypoints) pts.push_back(w);
  pts.push_back(z);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const bool last = i + 2 == pts.size();
    const double need = last ? std::min(spec.clearance, 0.5 * dist01(z)) : spec.clearance;
    if (segment_clearance(pts[i], pts[i + 1]) < need) return false;
  }
  return true;
}

template <class R>
struct PathIntegrator {
  int n;
  int bits;
  int M;
  std::vector<R> Q;
  std::vector<R> betas;  // beta_k as R, k < n

  PathIntegrator(int n_, int bits_) : n(n_), bits(bits_) {
    M = nodes_for_bits(bits);
    if constexpr (std::is_same_v<R, double>) {
      Q = double_matrix();
    } else {
      Q = build_integration_matrix<R>(M);
    }
    const BetaTable& bt = default_beta_table();
    for (int k = 0; k <= n; ++k) betas.push_back(to_real<R>(bt.beta(k)));
  }

  // Advance L^_2..L^_n (Y[p-1]) across the straight panel a -> b.
  void panel(std::vector<Cx<R>>& Y, const Cx<R>& a, const Cx<R>& b) const {
    using std::cos;
    using std::log;
    const int N = M + 1;
    const R pi = boost::math::constants::pi<R>();
    const Cx<R> mid = (a + b) * R(0.5);
    const Cx<R> half = (b - a) * R(0.5);
    std::vector<R> lz(N), l1(N), dlz(N), daz(N), dl1(N), da1(N);
    for (int j = 0; j < N; ++j) {
      const R s = cos(pi * R(j) / R(M));
      const Cx<R> z = mid + half * s;
      const Cx<R> one_minus = Cx<R>(R(1)) - z;
      lz[j] = log(cabs(z));
      l1[j] = log(cabs(one_minus));
      const Cx<R> wz = half / z;            // dlog z along s
      const Cx<R> w1 = -half / one_minus;   // dlog(1 - z) along s
      dlz[j] = wz.re;
      daz[j] = wz.im;
      dl1[j] = w1.re;
      da1[j] = w1.im;
    }
    std::vector<std::vector<Cx<R>>> vals(static_cast<std::size_t>(n) + 1);
    std::vector<Cx<R>> f(N);
    for (int p = 2; p <= n; ++p) {
      for (int j = 0; j < N; ++j) {
        if (p == 2) {
          // dL^_2 = -log|1-z| d i arg z + log|z| d i arg(1-z)
          f[j] = Cx<R>(R(0), -l1[j] * daz[j] + lz[j] * da1[j]);
        } else {
          // dL^_p = L^_{p-1} d i arg z - sum_{k=2}^{p-1} beta_k L^_{p-k,k}
          Cx<R> acc = vals[p - 1][j].times_i() * daz[j];
          R lzk = lz[j];  // log^{k-1}|z| for k = 2
          for (int k = 2; k <= p - 2; ++k) {
            if (betas[k] != 0) acc = acc - vals[p - k][j] * (betas[k] * lzk * dlz[j]);
            lzk *= lz[j];
          }
          // k = p-1: L^_{1,p-1} = alpha(1-z, z) log^{p-2}|z|
          if (betas[p - 1] != 0) {
            R alpha = -l1[j] * dlz[j] + lz[j] * dl1[j];
            acc = acc - Cx<R>(betas[p - 1] * alpha * lzk);
          }
          f[j] = acc;
        }
      }
      auto& v = vals[p];
      v.assign(N, Cx<R>());
      for (int i = 0; i < N; ++i) {
        Cx<R> acc = Y[p - 1];
        for (int j = 0; j < N; ++j) acc += f[j] * Q[static_cast<std::size_t>(i * N + j)];
        v[i] = acc;
      }
    }
    for (int p = 2; p <= n; ++p) Y[p - 1] = vals[p][0];
  }

  void segment(std::vector<Cx<R>>& Y, Cx<R> a, const Cx<R>& b, int min_steps) const {
    const R cap = min_steps > 0 ? cabs(b - a) / R(min_steps) * R(1.0000001) : R(2);
    for (int guard = 0; guard < 100000; ++guard) {
      const Cx<R> rest = b - a;
      const R remaining = cabs(rest);
      if (remaining == 0) return;
      const R d = std::min(cabs(a), cabs(a - Cx<R>(R(1))));
      R len = std::min(R(0.5) * d, std::min(cap, R(2)));
      if (remaining <= len) {
        panel(Y, a, b);
        return;
      }
      Cx<R> next = a + rest * (len / remaining);
      panel(Y, a, next);
      a = next;
    }
    fail(ErrorKind::Convergence, "path integration did not reach its target");
  }
};

template <class R>
Cx<R> from_double(cplx z) {
  return {R(z.real()), R(z.imag())};
}

template <class R>
std::vector<Cx<R>> path_all(int n, const Cx<R>& z, const PathSpec& spec, const std::vector<cplx>& waypoints,
                            int bits) {
  std::vector<Cx<R>> pts;
  pts.push_back(from_double<R>(spec.base_point));
  for (auto w : waypoints) pts.push_back(from_double<R>(w));
  pts.push_back(z);
  std::vector<Cx<R>> Y = direct_all(n, pts.front(), bits);
  if (n >= 2) {
    PathIntegrator<R> integ(n, bits);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) integ.segment(Y, pts[i], pts[i + 1], spec.steps_per_segment);
  }
  using std::log;
  Y[0] = Cx<R>(-log(cabs(Cx<R>(R(1)) - z)));
  for (int p = 1; p <= n; ++p) Y[p - 1] = project(p, Y[p - 1]);
  return Y;
}

std::vector<cplx> choose_waypoints(cplx z, const PolylogOptions& opt) {
  if (opt.explicit_path) {
    if (!path_admissible(z, opt.path, opt.path.waypoints))
      fail(ErrorKind::Domain, "path violates the clearance radius around 0 or 1");
    return opt.path.waypoints;
  }
  for (const auto& c : candidate_paths(z, opt.path))
    if (path_admissible(z, opt.path, c)) return c;
  fail(ErrorKind::Domain, "no admissible integration path to the target");
}

Route resolve_route(cplx z, const PolylogOptions& opt) {
  if (z == cplx(0, 0) || z == cplx(1, 0)) return Route::Limit;
  if (opt.route == Route::Direct) {
    if (std::abs(z) > 0.5) fail(ErrorKind::Domain, "direct route needs |z| <= 1/2");
    return Route::Direct;
  }
  if (opt.route == Route::Path || opt.explicit_path) return Route::Path;
  return std::abs(z) <= 0.5 ? Route::Direct : Route::Path;
}

template <class R>
std::vector<Cx<R>> sv_all_impl(int n, const Cx<R>& z, cplx zd, const PolylogOptions& opt, Route& used) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "single-valued polylog needs n >= 1");
  used = resolve_route(zd, opt);
  if (used == Route::Limit) {
    std::vector<Cx<R>> out(static_cast<std::size_t>(n));
    if (zd == cplx(0, 0)) return out;
    if (n == 1) fail(ErrorKind::Domain, "L^_1 diverges at z = 1");
    // Only the odd-weight values survive pi_n at z = 1.
    for (int p = 2; p <= n; ++p)
      if (p % 2 == 1) out[p - 1] = Cx<R>(zeta_value<R>(p, opt.precision_bits));
    // L^_1 has no value at 1; callers asking for the full vector get NaN there.
    out[0] = Cx<R>(std::numeric_limits<R>::quiet_NaN());
    return out;
  }
  if (used == Route::Direct) return direct_all(n, z, opt.precision_bits);
  return path_all(n, z, opt.path, choose_waypoints(zd, opt), opt.precision_bits);
}

std::mutex& hp_mutex() {
  static std::mutex m;
  return m;
}

struct HPScope {
  std::lock_guard<std::mutex> lock;
  unsigned saved;
  explicit HPScope(int bits) : lock(hp_mutex()), saved(HPReal::default_precision()) {
    HPReal::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2);
  }
  ~HPScope() { HPReal::default_precision(saved); }
};

std::string hp_string(const HPReal& v, int bits) {
  const int digits = static_cast<int>(std::ceil(bits * 0.30103));
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

void check_finite(cplx v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    fail(ErrorKind::Convergence, "non-finite polylogarithm value");
}

}  // namespace

cplx pi_projection(int n, cplx w) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "pi_n needs n >= 1");
  return n % 2 == 1 ? cplx(w.real(), 0.0) : cplx(0.0, w.imag());
}

std::string to_string(Route r) {
  switch (r) {
    case Route::Auto: return "auto";
    case Route::Direct: return "direct";
    case Route::Path: return "path";
    case Route::Limit: return "limit";
  }
  return "?";
}

cplx li(int n, cplx z, int precision_bits) {
  if (std::abs(z) > 0.5) fail(ErrorKind::Domain, "li: series route needs |z| <= 1/2");
  if (precision_bits <= 53) {
    auto v = li_series<double>(n, Cx<double>(z.real(), z.imag()), precision_bits);
    return {v.re, v.im};
  }
  HPScope scope(precision_bits);
  auto v = li_series<HPReal>(n, from_double<HPReal>(z), precision_bits);
  return {v.re.convert_to<double>(), v.im.convert_to<double>()};
}

std::vector<cplx> sv_polylog_all(int n, cplx z, const PolylogOptions& opt) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) fail(ErrorKind::Domain, "non-finite argument");
  Route used;
  std::vector<cplx> out;
  if (opt.precision_bits <= 53) {
    auto v = sv_all_impl<double>(n, Cx<double>(z.real(), z.imag()), z, opt, used);
    for (auto& c : v) out.emplace_back(c.re, c.im);
  } else {
    HPScope scope(opt.precision_bits);
    auto v = sv_all_impl<HPReal>(n, from_double<HPReal>(z), z, opt, used);
    for (auto& c : v) out.emplace_back(c.re.convert_to<double>(), c.im.convert_to<double>());
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!(used == Route::Limit && i == 0)) check_finite(out[i]);
  return out;
}

cplx sv_polylog(int n, cplx z, const PolylogOptions& opt) {
  if (n == 1 && z == cplx(1, 0)) fail(ErrorKind::Domain, "L^_1 diverges at z = 1");
  return sv_polylog_all(n, z, opt).back();
}

Route sv_polylog_route(cplx z, const PolylogOptions& opt) { return resolve_route(z, opt); }

HighPrecisionValue sv_polylog_hp(int n, const std::string& re, const std::string& im, const PolylogOptions& opt) {
  HPScope scope(std::max(opt.precision_bits, 53));
  HPReal zr(re), zi(im);
  cplx zd(zr.convert_to<double>(), zi.convert_to<double>());
  if (n == 1 && zd == cplx(1, 0)) fail(ErrorKind::Domain, "L^_1 diverges at z = 1");
  Route used;
  auto v = sv_all_impl<HPReal>(n, Cx<HPReal>(zr, zi), zd, opt, used);
  return {hp_string(v.back().re, opt.precision_bits), hp_string(v.back().im, opt.precision_bits), used};
}

HighPrecisionValue li_hp(int n, const std::string& re, const std::string& im, int precision_bits) {
  HPScope scope(std::max(precision_bits, 53));
  Cx<HPReal> z{HPReal(re), HPReal(im)};
  if (cabs(z) > HPReal(0.5)) fail(ErrorKind::Domain, "li: series route needs |z| <= 1/2");
  auto v = li_series<HPReal>(n, z, precision_bits);
  return {hp_string(v.re, precision_bits), hp_string(v.im, precision_bits), Route::Direct};
}

std::vector<std::vector<cplx>> candidate_paths(cplx z, const PathSpec& spec) {
  (void)spec;
  const double s = z.imag() >= 0 ? 1.0 : -1.0;
  std::vector<std::vector<cplx>> c;
  c.push_back({});
  for (double sign : {s, -s}) {
    c.push_back({cplx(0.5, sign * 1.0)});
    c.push_back({cplx(0.5, sign * 2.0)});
    c.push_back({cplx(0.5, sign * 1.0), cplx(-1.0, sign * 1.0)});
    c.push_back({cplx(0.5, sign * 1.0), cplx(2.0, sign * 1.0)});
    c.push_back({cplx(0.5, sign * 2.0), cplx(-2.0, sign * 2.0), cplx(-2.0, -sign * 2.0)});
  }
  return c;
}

namespace {

std::vector<cplx> first_admissible(cplx z, const PathSpec& spec, double side) {
  const double s = z.imag() >= 0 ? 1.0 : -1.0;
  std::vector<std::vector<cplx>> c;
  // Every candidate passes the point 1/2 + i*side*h first.
  for (double h : {1.5, 1.0, 2.5}) {
    c.push_back({cplx(0.5, side * h)});
    c.push_back({cplx(0.5, side * h), cplx(2.5, side * h)});
    c.push_back({cplx(0.5, side * h), cplx(-1.5, side * h)});
  }
  (void)s;
  for (const auto& w : c)
    if (path_admissible(z, spec, w)) return w;
  fail(ErrorKind::Domain, "no admissible path on the requested side");
}

}  // namespace

Report sv_polylog_check_symmetries(int n, int samples, double tol, unsigned long seed) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "symmetry check needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logr(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  double worst_inv = 0, worst_conj = 0;
  nlohmann::json worst_inv_at, worst_conj_at;
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n-1}
  int used = 0;
  while (used < samples) {
    cplx z = std::polar(std::exp(logr(rng)), ang(rng));
    if (std::abs(z - 1.0) < 0.05) continue;
    ++used;
    cplx v = sv_polylog(n, z);
    double d_inv = std::abs(sv_polylog(n, 1.0 / z) - sign * v);
    double d_conj = std::abs(sv_polylog(n, std::conj(z)) - sign * v);
    if (d_inv >= worst_inv) {
      worst_inv = d_inv;
      worst_inv_at = {z.real(), z.imag()};
    }
    if (d_conj >= worst_conj) {
      worst_conj = d_conj;
      worst_conj_at = {z.real(), z.imag()};
    }
  }
  Report r;
  r.suite = "polylog-symmetries";
  const std::string tag = "n=" + std::to_string(n) + ", " + std::to_string(samples) + " samples";
  r.add({"inversion L(1/z) = (-1)^{n-1} L(z), " + tag, worst_inv, tol, worst_inv < tol, {{"worst_at", worst_inv_at}}});
  r.add({"conjugation L(conj z) = (-1)^{n-1} L(z), " + tag, worst_conj, tol, worst_conj < tol,
         {{"worst_at", worst_conj_at}}});
  if (n == 2) {
    double worst = 0;
    nlohmann::json at;
    int done = 0;
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    while (done < samples) {
      cplx x(box(rng), box(rng)), y(box(rng), box(rng));
      cplx xy = x * y;
      cplx args[5] = {x, y, (1.0 - x) / (1.0 - xy), 1.0 - xy, (1.0 - y) / (1.0 - xy)};
      bool ok = std::abs(1.0 - xy) > 0.05;
      for (auto a : args) ok = ok && dist01(a) > 0.05 && std::abs(a) < 20;
      if (!ok) continue;
      ++done;
      cplx s = 0;
      for (auto a : args) s += sv_polylog(2, a);
      if (std::abs(s) >= worst) {
        worst = std::abs(s);
        at = {{"x", {x.real(), x.imag()}}, {"y", {y.real(), y.imag()}}};
      }
    }
    r.add({"five-term relation for L^_2, " + std::to_string(samples) + " samples", worst, tol, worst < tol,
           {{"worst_at", at}}});
  }
  return r;
}

Report sv_polylog_check_path_independence(int n, int samples, double tol, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logr(std::log(0.6), std::log(6.0));
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  PathSpec spec;
  double worst = 0, worst_overlap = 0;
  nlohmann::json at;
  int done = 0;
  while (done < samples) {
    cplx z = std::polar(std::exp(logr(rng)), ang(rng));
    if (dist01(z) < 0.1) continue;
    PolylogOptions up, down;
    up.explicit_path = down.explicit_path = true;
    up.path.waypoints = first_admissible(z, spec, +1.0);
    down.path.waypoints = first_admissible(z, spec, -1.0);
    ++done;
    cplx a = sv_polylog(n, z, up), b = sv_polylog(n, z, down);
    double d = std::abs(a - b);
    if (d >= worst) {
      worst = d;
      at = {z.real(), z.imag()};
    }
  }
  // overlap region: path route against the series route
  std::uniform_real_distribution<double> small(0.05, 0.5);
  for (int i = 0; i < samples; ++i) {
    cplx z = std::polar(small(rng), ang(rng));
    PolylogOptions path, direct;
    path.route = Route::Path;
    direct.route = Route::Direct;
    worst_overlap = std::max(worst_overlap, std::abs(sv_polylog(n, z, path) - sv_polylog(n, z, direct)));
  }
  Report r;
  r.suite = "polylog-paths";
  const std::string tag = "n=" + std::to_string(n) + ", " + std::to_string(samples) + " samples";
  r.add({"paths above vs below 1 agree, " + tag, worst, tol, worst < tol, {{"worst_at", at}}});
  r.add({"path route vs series route on |z| <= 1/2, " + tag, worst_overlap, tol, worst_overlap < tol});
  return r;
}

}  // namespace polyreg
