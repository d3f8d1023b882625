#include "ttk/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace ttk {

namespace {

long long iabs(long long x) { return std::llabs(x); }

long long mod_pos(long long x, long long m) {
  const long long r = x % m;
  return r < 0 ? r + m : r;
}

bool congruent_pm(long long r, long long x, long long m) {
  return mod_pos(r - x, m) == 0 || mod_pos(r + x, m) == 0;
}

std::string show_pair(const TwistPair& pair) {
  std::ostringstream os;
  os << "alpha=(" << pair.a << "," << pair.b << "), beta=(" << pair.c << ","
     << pair.d << "," << pair.e << "," << pair.f << ")";
  return os.str();
}

// Raw twist formula without the regime checks.
TTKParams raw_twist(const TwistPair& pair, long long n) {
  const long long dl = delta(pair);
  return TTKParams{pair.a + n * dl * pair.c, pair.b + n * dl * pair.d,
                   n * dl * pair.e, pair.f};
}

bool twist_admissible(const TwistPair& pair, long long n) {
  const TTKParams t = raw_twist(pair, n);
  return 1 < t.r && t.r < t.p && t.p < t.q && gcd_ll(t.p, t.q) == 1;
}

}  // namespace

TwistPair make_twist_pair(long long a, long long b, long long c, long long d,
                          long long e, long long f) {
  TwistPair pair{a, b, c, d, e, f,
                 e == 1 ? TwistPair::Regime::torus_beta
                        : TwistPair::Regime::generic_beta};
  validate_pair(pair);
  return pair;
}

void validate_pair(const TwistPair& pair) {
  if (gcd_ll(iabs(pair.a), iabs(pair.b)) != 1)
    throw unsupported_pair("alpha = (" + std::to_string(pair.a) + "," +
                           std::to_string(pair.b) + ") is not coprime");
  if (gcd_ll(iabs(pair.c), iabs(pair.d)) != 1)
    throw unsupported_pair("beta = (" + std::to_string(pair.c) + "," +
                           std::to_string(pair.d) + ") is not coprime");
  if (delta(pair) < 1)
    throw unsupported_pair("alpha and beta must intersect: |ad - bc| >= 1");
  if (pair.f == 0)
    throw unsupported_pair("beta must carry a nonzero twist (f != 0)");

  switch (pair.regime) {
    case TwistPair::Regime::generic_beta:
      if (!(1 < pair.e && pair.e < pair.c && pair.c < pair.d))
        throw unsupported_pair("generic regime needs 1 < e < c < d, got " +
                               show_pair(pair));
      break;
    case TwistPair::Regime::torus_beta: {
      if (pair.e != 1)
        throw unsupported_pair("torus regime needs e = 1");
      if (!(1 < pair.c && pair.c < pair.d))
        throw unsupported_pair("torus regime needs 1 < c < d, got " +
                               show_pair(pair));
      // beta is the (c,d) torus knot; alpha's knot type must differ.  An
      // unknotted alpha (min(|a|,|b|) <= 1) always differs from a knot.
      const long long lo = std::min(iabs(pair.a), iabs(pair.b));
      const long long hi = std::max(iabs(pair.a), iabs(pair.b));
      const bool same_type = (lo == pair.c && hi == pair.d);
      if (same_type && lo > 1)
        throw unsupported_pair(
            "alpha and beta have the same torus knot type (" +
            std::to_string(pair.c) + "," + std::to_string(pair.d) + ")");
      break;
    }
  }
}

long long delta(const TwistPair& pair) {
  return iabs(pair.a * pair.d - pair.b * pair.c);
}

long long min_n(const TwistPair& pair, long long search_bound) {
  validate_pair(pair);
  for (long long n = 1; n <= search_bound; ++n)
    if (twist_admissible(pair, n)) return n;
  throw search_exhausted("no admissible twist count n <= " +
                         std::to_string(search_bound) + " for " +
                         show_pair(pair));
}

TTKParams twist(const TwistPair& pair, long long n) {
  validate_pair(pair);
  if (n < 1) throw invalid_input("twist count n must be positive");
  if (twist_admissible(pair, n)) return raw_twist(pair, n);
  // Carry the smallest usable n: min_n when we are below it, otherwise the
  // next n clearing a sporadic gcd failure.
  long long hint = 0;
  for (long long m = n + 1; m <= kDefaultSearchBound; ++m)
    if (twist_admissible(pair, m)) {
      hint = m;
      break;
    }
  const long long global = min_n(pair);
  if (global > n) hint = global;
  const TTKParams t = raw_twist(pair, n);
  std::ostringstream os;
  os << "twist(" << show_pair(pair) << ", n=" << n << ") gives (p,q,r) = ("
     << t.p << "," << t.q << "," << t.r << ") violating 1 < r < p < q or "
     << "gcd(p,q) = 1; smallest usable n is " << hint;
  throw needs_larger_n(os.str(), hint);
}

long long catching_chi(const TwistPair& pair) {
  const long long chi = 1 -
                        (iabs(pair.a) - 1) * (iabs(pair.b) - 1) -
                        iabs(pair.b * pair.c) - iabs(pair.a * pair.d);
  if (chi >= 0)
    throw unsupported_pair("catching surface has chi(Q) = " +
                           std::to_string(chi) +
                           " >= 0; the twisting bound does not apply");
  return chi;
}

long long b1_lower(const TwistPair& pair, long long n) {
  const long long chi = catching_chi(pair);
  // The published denominator 36(|ad| + |bc| + (|a|-1)(|b|-1) - 1) must equal
  // -36 chi(Q); a mismatch means the Euler characteristic computation broke.
  const long long denom =
      36 * (iabs(pair.a * pair.d) + iabs(pair.b * pair.c) +
            (iabs(pair.a) - 1) * (iabs(pair.b) - 1) - 1);
  if (denom != -36 * chi)
    throw internal_error("catching-surface identity violated: denom = " +
                         std::to_string(denom) + ", -36 chi = " +
                         std::to_string(-36 * chi));
  return bgl_lower_bound(n, chi, 1);
}

bool primitive_h1(const TTKParams& params) {
  if (params.p < 2 || params.q < 2)
    throw invalid_input("primitivity test needs p, q > 1");
  return congruent_pm(params.r, 1, params.p) ||
         congruent_pm(params.r, params.q, params.p);
}

bool primitive_h2(const TTKParams& params) {
  if (params.p < 2 || params.q < 2)
    throw invalid_input("primitivity test needs p, q > 1");
  if (params.s != 1 && params.s != -1) return false;
  return congruent_pm(params.r, 1, params.q) ||
         congruent_pm(params.r, params.p, params.q);
}

CertState tunnel_number_one(const TTKParams& params) {
  return (primitive_h1(params) || primitive_h2(params)) ? CertState::certified
                                                        : CertState::unknown;
}

FamilyMember berge_family(long long m, long long n, int sign) {
  if (m <= 1) throw invalid_input("berge family needs m > 1");
  if (n < 1) throw invalid_input("berge family needs n >= 1");
  if (sign != 1 && sign != -1) throw invalid_input("sign must be +-1");

  FamilyMember mem;
  mem.family = "berge";
  mem.m = m;
  mem.n = n;
  mem.sign = sign;
  mem.params = TTKParams{m * n + 1, m * n + n + 1, n, sign};
  mem.pair = TwistPair{1, 1, m, m + 1, 1, sign,
                       TwistPair::Regime::torus_beta};
  if (gcd_ll(mem.params.p, mem.params.q) != 1)
    throw internal_error("berge member has gcd(p,q) != 1");

  mem.primitive_h1 = primitive_h1(mem.params);
  mem.primitive_h2 = primitive_h2(mem.params);
  if (!mem.primitive_h1 || !mem.primitive_h2)
    throw internal_error(
        "berge member failed a primitivity congruence: T(" +
        std::to_string(mem.params.p) + "," + std::to_string(mem.params.q) +
        "," + std::to_string(mem.params.r) + "," +
        std::to_string(mem.params.s) + ")");
  mem.constraints_ok = true;
  mem.b1_lower = b1_lower(mem.pair, n);

  std::ostringstream h1;
  h1 << "r = " << mem.params.r << " = q - p (mod p)";
  mem.record.push_back(make_citation(cite::primitive_inside, h1.str()));
  std::ostringstream h2;
  h2 << "s = " << sign << ", r = " << mem.params.r << " = -p (mod q)";
  mem.record.push_back(make_citation(cite::primitive_outside, h2.str()));
  mem.record.push_back(make_citation(
      cite::berge_vii_viii, "doubly primitive member of T(mn+1, mn+n+1, n, "
                            "+-1)"));
  return mem;
}

FamilyMember dean_family(DeanKind kind, std::optional<long long> l,
                         long long m, long long n, int sign) {
  if (m < 2) throw invalid_input("dean family needs m >= 2");
  if (n < 1) throw invalid_input("dean family needs n >= 1");
  if (sign != 1 && sign != -1) throw invalid_input("sign must be +-1");
  if (kind == DeanKind::two && (!l || *l < 2))
    throw invalid_input("dean kind two needs l >= 2");
  if (kind == DeanKind::one) l.reset();

  auto build = [&](long long nn) -> TTKParams {
    if (kind == DeanKind::one)
      return TTKParams{2 * m * nn - nn + 2, m * nn + 1, nn, sign};
    return TTKParams{(*l * m + 1) * nn + *l, m * nn + 1, nn, sign};
  };
  auto constraints = [&](const TTKParams& t) {
    if (t.r <= 1) return false;  // twisted regime
    if (gcd_ll(t.p, t.q) != 1) return false;
    if (kind == DeanKind::one)
      return t.r == 2 * t.q - t.p && 2 * t.q > t.p + 1 && t.q < t.p;
    return t.r == t.p - *l * t.q && t.q > 1 && 2 * t.q < t.p &&
           2 <= *l && *l * t.q <= t.p - 2;
  };

  const TTKParams params = build(n);
  if (!constraints(params)) {
    long long hint = 0;
    for (long long nn = 1; nn <= kDefaultSearchBound; ++nn)
      if (constraints(build(nn))) {
        hint = nn;
        break;
      }
    std::ostringstream os;
    os << "dean constraints fail at n = " << n << " for T(" << params.p << ","
       << params.q << "," << params.r << "," << params.s
       << "); minimal valid n is " << hint;
    throw needs_larger_n(os.str(), hint);
  }

  FamilyMember mem;
  mem.family = kind == DeanKind::one ? "dean1" : "dean2";
  mem.m = m;
  mem.l = l;
  mem.n = n;
  mem.sign = sign;
  mem.params = params;
  if (kind == DeanKind::one)
    mem.pair = TwistPair{2, 1, 2 * m - 1, m, 1, sign,
                         TwistPair::Regime::torus_beta};
  else
    mem.pair = TwistPair{*l, 1, *l * m + 1, m, 1, sign,
                         TwistPair::Regime::torus_beta};
  mem.primitive_h1 = primitive_h1(params);
  mem.primitive_h2 = primitive_h2(params);
  mem.constraints_ok = true;
  mem.b1_lower = b1_lower(mem.pair, n);

  std::ostringstream os;
  if (kind == DeanKind::one)
    os << "r = " << params.r << " = 2q - p; (p+1)/2 < " << params.q << " < "
       << params.p;
  else
    os << "r = " << params.r << " = p - " << *l << "q; 1 < " << params.q
       << " < p/2; 2 <= " << *l << " <= (p-2)/q";
  mem.record.push_back(make_citation(
      kind == DeanKind::one ? cite::dean_first : cite::dean_second,
      os.str()));
  return mem;
}

CertState hyperbolic_via_b1(const TTKParams& params, const TwistPair& pair,
                            long long n) {
  TTKParams expected;
  try {
    expected = twist(pair, n);
  } catch (const needs_larger_n&) {
    return CertState::unknown;  // outside the twisted regime
  }
  expected.s = params.s;  // the route is independent of the twist parameter
  if (!(expected == params))
    throw invalid_input("params do not arise from twisting the given pair");
  if (tunnel_number_one(params) != CertState::certified)
    return CertState::unknown;
  return b1_lower(pair, n) >= 2 ? CertState::certified : CertState::unknown;
}

DistanceTwoCertificate distance_two_certificate(long long m, long long n,
                                                int sign) {
  const FamilyMember mem = berge_family(m, n, sign);
  DistanceTwoCertificate cert;
  cert.m = m;
  cert.n = n;
  cert.sign = sign;
  cert.params = mem.params;
  cert.b1_lower = mem.b1_lower;

  CertState hyp = CertState::unknown;
  try {
    hyp = hyperbolic_via_b1(mem.params, mem.pair, n);
  } catch (const invalid_input&) {
    hyp = CertState::unknown;
  }
  if (hyp != CertState::certified) {
    cert.issued = false;
    if (mem.b1_lower < 2)
      cert.refusal_reason =
          "genus-one lower bound " + std::to_string(mem.b1_lower) +
          " < 2 cannot exclude toroidal tunnel-one knots and torus knots";
    else
      cert.refusal_reason = "twist count n = " + std::to_string(n) +
                            " is outside the twisted regime 1 < r < p < q";
    return cert;
  }

  cert.issued = true;
  cert.record = mem.record;
  cert.record.push_back(make_citation(
      cite::atoroidal_via_bridge,
      "tunnel number one and b_1 >= " + std::to_string(mem.b1_lower) +
          " >= 2, so the member is hyperbolic"));
  cert.record.push_back(make_citation(
      cite::distance_two,
      "hyperbolic excludes distance <= 1; the doubly primitive position "
      "gives disjoint disks, so distance <= 2; hence exactly 2"));
  return cert;
}

namespace {

CertValue int_value(std::string key, long long v) {
  return CertValue{std::move(key), v, 1, false};
}

CertValue rat_value(std::string key, long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = gcd_ll(std::llabs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return CertValue{std::move(key), num, den, true};
}

}  // namespace

GapCertificate build_certificate(long long C, const TwistPair& pair,
                                 long long n, long long s) {
  if (C < 1) throw invalid_input("gap order C must be positive");
  validate_pair(pair);
  const long long chi = catching_chi(pair);

  // Re-validate beta with f replaced by the chosen twist parameter.
  TwistPair substituted = pair;
  substituted.f = s;
  try {
    validate_pair(substituted);
  } catch (const unsupported_pair& e) {
    throw unsupported_pair(
        std::string("pair invalid under the s-substitution: ") + e.what());
  }

  TTKParams params;
  try {
    params = twist(pair, n);
  } catch (const needs_larger_n& e) {
    throw certificate_invalid(std::string("twist count rejected: ") +
                              e.what());
  }
  params.s = s;
  const long long p = params.p, q = params.q, r = params.r;

  const long long threshold = b0_twist_threshold(p);
  if (iabs(s) <= threshold)
    throw certificate_invalid("|s| = " + std::to_string(iabs(s)) +
                              " must strictly exceed 18p = " +
                              std::to_string(threshold));
  if (!twist_region_hyperbolic(p, q, r))
    throw certificate_invalid(
        "r shares a divisibility relation with p or q; the twist-region "
        "hyperbolicity criterion does not fire");

  GapCertificate cert;
  cert.C = C;
  cert.pair = pair;
  cert.n = n;
  cert.s = s;
  cert.params = params;
  cert.chi_q = chi;
  cert.b0 = p;
  cert.b1_lower = b1_lower(pair, n);
  cert.b1_upper = std::min(r, p - r);
  cert.b2_upper = b2_upper(params);
  cert.gap0 = cert.b0 - cert.b1_upper;
  cert.gap1 = cert.b1_lower - cert.b2_upper;
  cert.tunnel_one = tunnel_number_one(params) == CertState::certified;

  if (cert.b1_lower > cert.b1_upper)
    throw internal_error("genus-one lower bound exceeds the upper bound");
  if (cert.gap0 < C)
    throw certificate_invalid("gap b_0 - b_1 = " + std::to_string(cert.gap0) +
                              " below the requested order " +
                              std::to_string(C));
  if (cert.gap1 < C)
    throw certificate_invalid("gap b_1 - b_2 = " + std::to_string(cert.gap1) +
                              " below the requested order " +
                              std::to_string(C));

  auto entry = [&](const cite::Entry& e,
                   std::vector<CertValue> values) -> HypothesisEntry {
    std::sort(values.begin(), values.end(),
              [](const CertValue& x, const CertValue& y) {
                return x.key < y.key;
              });
    return HypothesisEntry{e.result, e.quote, std::move(values)};
  };

  cert.hypothesis_chain.push_back(entry(
      cite::high_twist_bridge,
      {int_value("p", p), int_value("q", q), int_value("r", r),
       int_value("s", s), int_value("threshold", threshold),
       int_value("b0", cert.b0)}));
  cert.hypothesis_chain.push_back(entry(
      cite::link_hyperbolic,
      {int_value("r", r), int_value("p_mod_r", p % r),
       int_value("q_mod_r", q % r), int_value("r_mod_p", r % p),
       int_value("r_mod_q", r % q)}));
  cert.hypothesis_chain.push_back(
      entry(cite::knot_hyperbolic, {int_value("s", s), int_value("bound", 5)}));
  cert.hypothesis_chain.push_back(entry(
      cite::genus_one_lower,
      {int_value("n", n), int_value("chi_q", chi),
       rat_value("bound", n + 36 * chi, -72 * chi),
       int_value("b1_lower", cert.b1_lower)}));
  cert.hypothesis_chain.push_back(entry(
      cite::genus_one_upper,
      {int_value("r", r), int_value("p_minus_r", p - r),
       int_value("b1_upper", cert.b1_upper)}));
  cert.hypothesis_chain.push_back(
      entry(cite::genus_two_upper, {int_value("b2_upper", cert.b2_upper)}));
  return cert;
}

GapCertificate certify_gaps(long long C, const TwistPair& pair,
                            long long search_bound) {
  if (C < 1) throw invalid_input("gap order C must be positive");
  validate_pair(pair);
  const long long chi = catching_chi(pair);

  // Real-valued BGL bound >= C+1: (1/2)(n / (-36 chi) - 1) >= C + 1, i.e.
  // n >= -36 chi (2C + 3).  The emitted b1_lower (integer ceiling) then
  // lands exactly on C+1 at this minimal n.
  const long long bound_floor = -36 * chi * (2 * C + 3);
  long long n = std::max(min_n(pair, search_bound), bound_floor);
  for (; n <= search_bound; ++n) {
    if (!twist_admissible(pair, n)) continue;
    const TTKParams t = raw_twist(pair, n);
    const long long gap0 = t.p - std::min(t.r, t.p - t.r);
    if (!twist_region_hyperbolic(t.p, t.q, t.r)) continue;
    if (gap0 < C) continue;
    break;
  }
  if (n > search_bound)
    throw search_exhausted("no twist count n <= " +
                           std::to_string(search_bound) +
                           " satisfies the gap hypotheses");

  const TTKParams t = twist(pair, n);
  const long long s = (pair.f > 0 ? 1 : -1) * (b0_twist_threshold(t.p) + 1);
  return build_certificate(C, pair, n, s);
}

}  // namespace ttk
