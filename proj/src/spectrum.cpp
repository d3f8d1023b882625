#include "ttk/spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace ttk {

namespace {

using boost::multiprecision::cpp_int;

// ceil(a / b) for b > 0
cpp_int ceil_div(const cpp_int& a, const cpp_int& b) {
  cpp_int q = a / b;  // truncates toward zero
  if (a % b != 0 && a > 0) ++q;
  return q;
}

std::string show_params(const TTKParams& params) {
  std::ostringstream os;
  os << "T(" << params.p << "," << params.q << "," << params.r << ","
     << params.s << ")";
  return os.str();
}

}  // namespace

long long surface_slope(const TTKParams& params) {
  const __int128 slope = static_cast<__int128>(params.p) * params.q +
                         static_cast<__int128>(params.r) * params.r *
                             params.s;
  if (slope > std::numeric_limits<long long>::max() ||
      slope < std::numeric_limits<long long>::min())
    throw invalid_input("surface slope pq + r^2 s overflows 64 bits");
  return static_cast<long long>(slope);
}

bool twist_region_hyperbolic(long long p, long long q, long long r) {
  // Conservative conjunction: r > 1 and neither divisibility relation in
  // either direction.  Within 0 <= r <= p this refuses exactly r = p and the
  // proper divisors of p or q, a subset of what the cited criterion allows.
  return r > 1 && p % r != 0 && q % r != 0 && r % p != 0 && r % q != 0;
}

long long b0_twist_threshold(long long p) {
  if (p <= 1) throw invalid_input("threshold needs p > 1");
  return 18 * p;
}

BoundReport b0_bounds(const TTKParams& params) {
  validate(params);
  BoundReport rep;
  rep.genus = 0;
  const long long p = params.p, q = params.q, r = params.r, s = params.s;

  if (r <= 1) {
    const long long value = std::min(p, q);
    rep.exact = rep.lower = rep.upper = value;
    std::ostringstream os;
    os << "r = " << r << " <= 1, so " << show_params(params)
       << " is the (p,q) torus knot; min{" << p << "," << q << "} = " << value;
    rep.provenance.push_back(make_citation(cite::torus_bridge, os.str()));
    return rep;
  }

  if (r < p) {
    const long long threshold = b0_twist_threshold(p);
    if (p < q && std::llabs(s) > threshold) {
      rep.exact = rep.lower = rep.upper = p;
      std::ostringstream os;
      os << "1 < " << r << " < " << p << " < " << q << "; |s| = "
         << std::llabs(s) << " > 18p = " << threshold;
      rep.provenance.push_back(
          make_citation(cite::high_twist_bridge, os.str()));
    } else {
      rep.upper = p;
      std::ostringstream os;
      os << "1 < " << r << " < " << p
         << ": the p-bridge sphere survives the twisting for every s";
      rep.provenance.push_back(
          make_citation(cite::bridge_sphere_upper, os.str()));
    }
    return rep;
  }

  // r = p: no bound certified in this regime
  return rep;
}

std::optional<long long> b1_upper(const TTKParams& params) {
  validate(params);
  if (params.r <= 1) return 0;
  if (params.r < params.p) return std::min(params.r, params.p - params.r);
  return std::nullopt;
}

long long b2_upper(const TTKParams& params) {
  validate(params);
  return 1;
}

std::vector<BoundReport> stabilization_chain(
    std::vector<BoundReport> reports) {
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].genus <= reports[i - 1].genus)
      throw invalid_input("reports must be sorted by increasing genus");
    if (reports[i].genus != reports[i - 1].genus + 1)
      continue;  // propagation only links consecutive genera
    const std::optional<long long> prev = reports[i - 1].effective_upper();
    if (!prev || *prev <= 0) continue;
    const long long candidate = *prev - 1;
    BoundReport& cur = reports[i];
    if (cur.exact) continue;  // never degrade an exact value
    if (!cur.upper || *cur.upper > candidate) {
      cur.upper = candidate;
      std::ostringstream os;
      os << "b_" << reports[i - 1].genus << " <= " << *prev << " gives b_"
         << cur.genus << " <= " << candidate;
      cur.provenance.push_back(
          make_citation(cite::meridional_stabilization, os.str()));
    }
  }
  return reports;
}

HyperbolicityStatus hyperbolicity(const TTKParams& params) {
  validate(params);
  HyperbolicityStatus st;
  const long long p = params.p, q = params.q, r = params.r;
  const long long s = params.s;
  if (twist_region_hyperbolic(p, q, r)) {
    st.link_status = CertState::certified;
    std::ostringstream os;
    os << "r = " << r << " > 1 shares no multiple relation with p or q: "
       << "p mod r = " << p % r << ", q mod r = " << q % r << ", r mod p = "
       << r % p << ", r mod q = " << r % q;
    st.reasons.push_back(make_citation(cite::link_hyperbolic, os.str()));
    if (std::llabs(s) > 5) {
      st.knot_status = CertState::certified;
      std::ostringstream os2;
      os2 << "|s| = " << std::llabs(s) << " > 5";
      st.reasons.push_back(make_citation(cite::knot_hyperbolic, os2.str()));
    }
  }
  return st;
}

long long arc_bound(long long chi_f, long long chi_g) {
  if (chi_f >= 0 || chi_g >= 0)
    throw invalid_input("arc bound needs negative Euler characteristics");
  return 9 * chi_f * chi_g;
}

long long max_nonparallel_arcs(long long chi) {
  if (chi >= 0)
    throw invalid_input("arc count needs a negative Euler characteristic");
  return -3 * chi;
}

long long bgl_lower_bound(long long n, long long chi_q, long long g) {
  if (n < 0) throw invalid_input("twist count n must be nonnegative");
  if (g < 0) throw invalid_input("genus must be nonnegative");
  if (chi_q >= 0) throw invalid_input("bound needs chi(Q) < 0");
  const cpp_int denom = cpp_int(-36) * chi_q;  // positive
  const cpp_int numer = cpp_int(n) - (cpp_int(2) * g - 1) * denom;
  cpp_int value = ceil_div(numer, 2 * denom);
  if (value < 0) value = 0;
  return value.convert_to<long long>();
}

long long bgl_n_for_bound(long long target, long long chi_q, long long g) {
  if (chi_q >= 0) throw invalid_input("bound needs chi(Q) < 0");
  if (g < 0) throw invalid_input("genus must be nonnegative");
  if (target <= 0) return 0;
  // bound(n) >= target iff (n - (2g-1)D) / 2D > target - 1
  const cpp_int denom = cpp_int(-36) * chi_q;
  const cpp_int n = denom * (2 * cpp_int(target) + 2 * g - 3) + 1;
  return n < 0 ? 0 : n.convert_to<long long>();
}

std::vector<BoundReport> spectrum_report(const TTKParams& params) {
  validate(params);
  std::vector<BoundReport> reports;
  reports.push_back(b0_bounds(params));

  BoundReport g1;
  g1.genus = 1;
  if (params.r > 1 && params.r < params.p) {
    g1.upper = std::min(params.r, params.p - params.r);
    std::ostringstream os;
    os << "1 < " << params.r << " < " << params.p << ": min{" << params.r
       << ", " << params.p - params.r << "} = " << *g1.upper;
    g1.provenance.push_back(make_citation(cite::genus_one_upper, os.str()));
  } else if (params.r <= 1) {
    // Torus regime: the min{r, p-r} bound is outside its hypothesis, so the
    // genus-one upper comes from stabilization below.
    g1.provenance.push_back(make_citation(
        cite::torus_regime_b1,
        "r = " + std::to_string(params.r) + " <= 1 (torus regime)"));
  }
  reports.push_back(std::move(g1));

  BoundReport g2;
  g2.genus = 2;
  g2.upper = b2_upper(params);
  g2.provenance.push_back(make_citation(
      cite::genus_two_upper, show_params(params) + " lies on the standard "
                                                   "genus-two splitting"));
  reports.push_back(std::move(g2));

  return stabilization_chain(std::move(reports));
}

}  // namespace ttk
