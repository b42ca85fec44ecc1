#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "polyreg/error.hpp"
#include "polyreg/polylog.hpp"

using namespace polyreg;
using std::numbers::pi;

namespace {
constexpr double kCatalan = 0.915965594177219015054603514932;
constexpr double kZeta3 = 1.202056903159594285399738161511;

// Bloch-Wigner D(z) = Im Li_2(z) + arg(1 - z) log|z| with Li_2 from its power
// series at the smallest of the six anharmonic images of z; D is invariant
// under the cyclic ones and changes sign under the others.
double bloch_wigner(cplx z) {
  const std::pair<cplx, int> images[] = {{z, 1},           {1.0 - 1.0 / z, 1}, {1.0 / (1.0 - z), 1},
                                         {1.0 / z, -1},    {1.0 - z, -1},      {z / (z - 1.0), -1}};
  auto best = images[0];
  for (auto& w : images)
    if (std::abs(w.first) < std::abs(best.first)) best = w;
  const cplx w = best.first;
  cplx s = 0, p = 1;
  for (int k = 1; k < 2000; ++k) {
    p *= w;
    s += p / (double(k) * k);
  }
  return best.second * (s.imag() + std::arg(1.0 - w) * std::log(std::abs(w)));
}

// smallest modulus among the anharmonic images
double reach(cplx z) {
  double m = 1e300;
  for (cplx w : {z, 1.0 - 1.0 / z, 1.0 / (1.0 - z), 1.0 / z, 1.0 - z, z / (z - 1.0)}) m = std::min(m, std::abs(w));
  return m;
}
}  // namespace

TEST_CASE("pi projection") {
  CHECK(pi_projection(1, {3, 4}) == cplx(3, 0));
  CHECK(pi_projection(2, {3, 4}) == cplx(0, 4));
  CHECK(pi_projection(2, {5, 0}) == cplx(0, 0));
}

TEST_CASE("classical polylog series") {
  CHECK(li(1, 0) == cplx(0));
  CHECK(li(3, 0) == cplx(0));
  CHECK(std::abs(li(1, 0.5) - cplx(std::log(2.0))) < 1e-15);
  // Li_2(1/2) = π^2/12 - log^2(2)/2
  CHECK(std::abs(li(2, 0.5) - cplx(pi * pi / 12 - std::log(2.0) * std::log(2.0) / 2)) < 1e-15);
  CHECK_THROWS_AS(li(2, 0.9), Error);
  const HighPrecisionValue h = li_hp(2, "0.5", "0", 128);
  CHECK(h.re.substr(0, 14) == "0.582240526465");
}

TEST_CASE("single-valued polylog special values") {
  for (int j = 1; j < 20; ++j) CHECK(std::abs(sv_polylog(2, cplx(j / 20.0, 0))) < 1e-10);
  CHECK(std::abs(sv_polylog(2, cplx(0, 1)) - cplx(0, kCatalan)) < 1e-8);
  CHECK(std::abs(sv_polylog(3, cplx(1, 0)) - cplx(kZeta3)) < 1e-8);
  for (int n = 1; n <= 5; ++n) CHECK(sv_polylog(n, 0) == cplx(0));
  CHECK_THROWS_AS(sv_polylog(1, 1), Error);
}

TEST_CASE("L^_2 is i times the Bloch-Wigner function") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 30; ++i) {
    const cplx z(u(rng), u(rng));
    if (std::abs(z) < 0.1 || std::abs(1.0 - z) < 0.1 || reach(z) > 0.8) continue;
    CHECK(std::abs(sv_polylog(2, z) - cplx(0, bloch_wigner(z))) < 1e-9);
  }
}

TEST_CASE("five-term relation") {
  const cplx x(0.3, 0.1), y(0.4, -0.2);
  const cplx s = sv_polylog(2, x) + sv_polylog(2, y) + sv_polylog(2, (1.0 - x) / (1.0 - x * y)) +
                 sv_polylog(2, 1.0 - x * y) + sv_polylog(2, (1.0 - y) / (1.0 - x * y));
  CHECK(std::abs(s) < 1e-8);
}

TEST_CASE("symmetries") {
  const cplx z(2, 1);
  CHECK(std::abs(sv_polylog(3, std::conj(z)) - sv_polylog(3, z)) < 1e-8);
  CHECK(std::abs(sv_polylog(3, 1.0 / z) - sv_polylog(3, z)) < 1e-8);
  CHECK(std::abs(sv_polylog(4, 1.0 / z) + sv_polylog(4, z)) < 1e-8);
  CHECK(sv_polylog_check_symmetries(2, 100, 1e-8, 11).pass());
  CHECK(sv_polylog_check_symmetries(3, 25, 1e-8, 12).pass());
  CHECK(sv_polylog_check_path_independence(3, 10, 1e-8, 13).pass());
}

TEST_CASE("routes agree") {
  PolylogOptions direct, path;
  direct.route = Route::Direct;
  path.route = Route::Path;
  for (const cplx z : {cplx(0.3, 0.2), cplx(-0.4, 0.1), cplx(0.1, -0.45)})
    for (int n = 2; n <= 5; ++n) CHECK(std::abs(sv_polylog(n, z, direct) - sv_polylog(n, z, path)) < 1e-10);
}

TEST_CASE("high precision") {
  PolylogOptions o;
  o.precision_bits = 200;
  const HighPrecisionValue v = sv_polylog_hp(2, "0", "1", o);
  CHECK(v.im.substr(0, 32) == "0.915965594177219015054603514932");
  const HighPrecisionValue z3 = sv_polylog_hp(3, "1", "0", o);
  CHECK(z3.re.substr(0, 32) == "1.202056903159594285399738161511");
}
