#ifndef TTK_FAMILIES_HPP
#define TTK_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ttk/spectrum.hpp"

namespace ttk {

inline constexpr long long kDefaultSearchBound = 1'000'000;

// Two curves on the genus-two splitting: alpha = T(a,b,0,0) (may be
// unknotted), beta = T(c,d,e,f).  torus_beta is the e = 1 regime used by
// every Berge/Dean construction (beta a (c,d) torus knot whose surface slope
// cd + f differs from cd exactly when f != 0); generic_beta is 1 < e < c < d.
struct TwistPair {
  enum class Regime { torus_beta, generic_beta };

  long long a = 1, b = 1;
  long long c = 2, d = 3, e = 1, f = 1;
  Regime regime = Regime::torus_beta;

  friend bool operator==(const TwistPair&, const TwistPair&) = default;
};

// Regime inferred from e; throws unsupported_pair when neither regime's
// constraints hold.
TwistPair make_twist_pair(long long a, long long b, long long c, long long d,
                          long long e, long long f);
void validate_pair(const TwistPair& pair);

// |ad - bc|, the geometric intersection number of alpha and beta.
long long delta(const TwistPair& pair);

// T(a + n delta c, b + n delta d, n delta e, f).  Throws needs_larger_n
// (carrying the smallest usable n) when 1 < r < p < q or gcd(p,q) = 1 fails.
TTKParams twist(const TwistPair& pair, long long n);

// Smallest n >= 1 with 1 < r < p < q and gcd(p,q) = 1; search_exhausted
// beyond search_bound.
long long min_n(const TwistPair& pair,
                long long search_bound = kDefaultSearchBound);

// chi(Q) = 1 - (|a|-1)(|b|-1) - |bc| - |ad| for the catching surface.
// Pure formula (it is also applied to the Dean defining pairs, which are not
// valid TwistPairs); throws unsupported_pair when the result is >= 0.
long long catching_chi(const TwistPair& pair);

// BGL genus-one lower bound for the n-fold twist of the pair; asserts the
// algebraic identity between the catching-surface Euler characteristic and
// the published denominator.
long long b1_lower(const TwistPair& pair, long long n);

// r = +-1 (mod p) or r = +-q (mod p); needs only p, q > 1.
bool primitive_h1(const TTKParams& params);

// s = +-1 and (r = +-1 (mod q) or r = +-p (mod q)); needs only p, q > 1.
bool primitive_h2(const TTKParams& params);

// Certified iff primitive on at least one side (sufficient only).
CertState tunnel_number_one(const TTKParams& params);

struct FamilyMember {
  std::string family;  // "berge" | "dean1" | "dean2"
  long long m = 0;
  std::optional<long long> l;
  long long n = 0;
  int sign = 1;
  TTKParams params;
  TwistPair pair;  // defining curves (not validated for the Dean families)
  bool primitive_h1 = false;
  bool primitive_h2 = false;
  bool constraints_ok = false;
  long long b1_lower = 0;
  std::vector<Citation> record;
};

// T(mn+1, mn+n+1, n, sign), doubly primitive by the congruence tests;
// failure of either test would contradict the construction and raises
// internal_error.
FamilyMember berge_family(long long m, long long n, int sign);

enum class DeanKind { one, two };

// Kind one: T(2mn-n+2, mn+1, n, sign) with r = 2q-p, (p+1)/2 < q < p.
// Kind two: p = (lm+1)n + l, q = mn+1, r = n with r = p-lq, 1 < q < p/2,
// 2 <= l <= (p-2)/q.  Constraint failure raises needs_larger_n carrying the
// minimal valid n.
FamilyMember dean_family(DeanKind kind, std::optional<long long> l,
                         long long m, long long n, int sign);

// Certified iff tunnel number one and the BGL bound rules out the toroidal
// tunnel-one knots (b_1 >= 2) and torus knots.
CertState hyperbolic_via_b1(const TTKParams& params, const TwistPair& pair,
                            long long n);

struct DistanceTwoCertificate {
  bool issued = false;
  long long m = 0, n = 0;
  int sign = 1;
  TTKParams params;
  long long b1_lower = 0;
  std::string refusal_reason;  // empty when issued
  std::vector<Citation> record;
};

// Corollary-style certificate for the Berge member T(mn+1, mn+n+1, n, sign):
// a minimal genus Heegaard surface of distance exactly two, available once
// hyperbolic_via_b1 certifies.
DistanceTwoCertificate distance_two_certificate(long long m, long long n,
                                                int sign);

// One checked value inside a certificate hypothesis entry; rationals keep
// exact numerator/denominator.
struct CertValue {
  std::string key;
  long long num = 0;
  long long den = 1;
  bool is_rational = false;
};

struct HypothesisEntry {
  std::string result;
  std::string quote;
  std::vector<CertValue> values;  // serialized sorted by key
};

// Witness that T(p,q,r,s) has b_0 - b_1 >= C and b_1 - b_2 >= C, with the
// full chain of checked hypotheses.
struct GapCertificate {
  long long C = 0;
  TwistPair pair;
  long long n = 0;
  long long s = 0;
  TTKParams params;
  long long chi_q = 0;
  long long b0 = 0;
  long long b1_lower = 0;
  long long b1_upper = 0;
  long long b2_upper = 0;
  long long gap0 = 0;
  long long gap1 = 0;
  std::vector<HypothesisEntry> hypothesis_chain;
  bool tunnel_one = false;
};

// Deterministic reconstruction of every certificate field from the four
// inputs; throws certificate_invalid when a hypothesis fails.  certify_gaps
// and the validator share this single code path.
GapCertificate build_certificate(long long C, const TwistPair& pair,
                                 long long n, long long s);

// Find the minimal n (real-valued BGL bound >= C+1, i.e.
// n >= -36 chi(Q) (2C+3), adjusted upward for the twist constraints and
// gap0 >= C), set s = (18p+1) with the sign of f, and emit the certificate.
GapCertificate certify_gaps(long long C, const TwistPair& pair,
                            long long search_bound = kDefaultSearchBound);

}  // namespace ttk

#endif
