#pragma once

#include <complex>
#include <string>
#include <vector>

#include "polyreg/report.hpp"

namespace polyreg {

using cplx = std::complex<double>;

// pi_n(a + ib) = a for odd n, ib for even n.
cplx pi_projection(int n, cplx w);

enum class Route { Auto, Direct, Path, Limit };
std::string to_string(Route r);

// Integration path for the single-valued polylogarithms. The path starts at
// base_point (where the series route is used), visits the waypoints and ends
// at the target. Every segment must keep `clearance` away from 0 and 1; the
// final segment may come as close as half the target's own distance.
struct PathSpec {
  cplx base_point{0.5, 0.0};
  std::vector<cplx> waypoints;
  double clearance = 0.25;
  // Minimum number of panels per segment; 0 lets the panel size follow the
  // distance to 0 and 1 alone.
  int steps_per_segment = 0;
};

struct PolylogOptions {
  int precision_bits = 53;
  Route route = Route::Auto;
  // Used when route is Path or Auto chooses path integration; if empty of
  // waypoints an admissible path is chosen automatically.
  PathSpec path;
  bool explicit_path = false;
};

// Li_n(z) by its power series, for |z| <= 1/2 (domain error otherwise).
cplx li(int n, cplx z, int precision_bits = 53);

// L^_n(z) (single-valued polylogarithm). Direct formula for |z| <= 1/2, path
// integration of the differential equations elsewhere; L^_n(0) = 0 and
// L^_n(1) = pi_n(Li_n(1)) for n >= 2 (n = 1 at z = 1 is a domain error).
cplx sv_polylog(int n, cplx z, const PolylogOptions& opt = {});

// All of L^_1(z), ..., L^_n(z) at once (index 0 holds L^_1).
std::vector<cplx> sv_polylog_all(int n, cplx z, const PolylogOptions& opt = {});

// Route actually used by sv_polylog for these options.
Route sv_polylog_route(cplx z, const PolylogOptions& opt);

// Arbitrary precision evaluation; z parts and results as decimal strings with
// about precision_bits * log10(2) significant digits.
struct HighPrecisionValue {
  std::string re;
  std::string im;
  Route route = Route::Auto;
};
HighPrecisionValue sv_polylog_hp(int n, const std::string& re, const std::string& im,
                                 const PolylogOptions& opt);
HighPrecisionValue li_hp(int n, const std::string& re, const std::string& im, int precision_bits);

// Waypoint lists around 1 from above and from below (both admissible for z).
// Used by the path-independence check.
std::vector<std::vector<cplx>> candidate_paths(cplx z, const PathSpec& spec);

// Regression harness for the single-valued symmetries
//   L^_n(1/z) = (-1)^{n-1} L^_n(z),  L^_n(conj z) = (-1)^{n-1} L^_n(z)
// over `samples` seeded random points of 0.1 < |z| < 10, plus (n = 2) the
// five-term relation at the same number of random (x, y).
Report sv_polylog_check_symmetries(int n, int samples, double tol, unsigned long seed);

// Single-valuedness: two admissible paths with different winding around 1.
Report sv_polylog_check_path_independence(int n, int samples, double tol, unsigned long seed);

}  // namespace polyreg
