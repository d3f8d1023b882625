#ifndef TTK_SPECTRUM_HPP
#define TTK_SPECTRUM_HPP

#include <optional>
#include <vector>

#include "ttk/braid.hpp"
#include "ttk/citations.hpp"

namespace ttk {

// Per-genus bridge-number interval with the results certifying each
// endpoint.  When exact is set, lower == upper == exact.
struct BoundReport {
  int genus = 0;
  std::optional<long long> lower;
  std::optional<long long> upper;
  std::optional<long long> exact;
  std::vector<Citation> provenance;

  // exact if present, else upper: the value meridional stabilization can
  // propagate from this genus
  std::optional<long long> effective_upper() const {
    return exact ? exact : upper;
  }
};

enum class CertState { certified, unknown };

// The hyperbolicity criteria are sufficient, never necessary; "unknown"
// carries no negative claim.
struct HyperbolicityStatus {
  CertState link_status = CertState::unknown;
  CertState knot_status = CertState::unknown;
  // set when knot_status was certified by the tunnel-one/b_1 route instead
  // of chaining through the link criterion
  bool alt_route = false;
  std::vector<Citation> reasons;
};

// pq + r^2 s
long long surface_slope(const TTKParams& params);

// Sufficient criterion for hyperbolicity of the torus knot plus twisting
// circle: r > 1 with no divisibility relation against p or q (checked in
// both directions, the conservative reading).
bool twist_region_hyperbolic(long long p, long long q, long long r);

// Genus-zero report: exact min(p,q) in the torus regime (r <= 1); exact p
// when 1 < r < p < q and |s| > 18p (strict); upper p when 1 < r < p;
// otherwise no bounds.
BoundReport b0_bounds(const TTKParams& params);

// 18p; any strictly larger |s| certifies b_0 = p under 1 < r < p < q.
long long b0_twist_threshold(long long p);

// min(r, p-r) when 1 < r < p; 0 in the torus regime r in {0,1}; absent for
// r = p.
std::optional<long long> b1_upper(const TTKParams& params);

// Natural genus-two position: always 1.
long long b2_upper(const TTKParams& params);

// Propagate upper bounds down the spectrum: upper_{g+1} <= upper_g - 1,
// taking minima with existing uppers; lower bounds are never touched.
// Input must be sorted by strictly increasing genus.
std::vector<BoundReport> stabilization_chain(std::vector<BoundReport> reports);

// Link certified iff r > 1, r mod p != 0, r mod q != 0; knot certified iff
// link certified and |s| > 5 (strict).
HyperbolicityStatus hyperbolicity(const TTKParams& params);

// 9 chi_f chi_g; both arguments must be negative.
long long arc_bound(long long chi_f, long long chi_g);

// -3 chi; argument must be negative.
long long max_nonparallel_arcs(long long chi);

// Smallest integer >= (1/2)(n / (-36 chi_q) - 2g + 1), clamped at 0.
// Exact rational arithmetic throughout.
long long bgl_lower_bound(long long n, long long chi_q, long long g);

// Smallest n with bgl_lower_bound(n, chi_q, g) >= target.
long long bgl_n_for_bound(long long target, long long chi_q, long long g);

// Genus 0,1,2 reports assembled from the bounds above plus stabilization.
// No genus-one lower bound here; that needs a family context.
std::vector<BoundReport> spectrum_report(const TTKParams& params);

}  // namespace ttk

#endif
