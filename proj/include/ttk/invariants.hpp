#ifndef TTK_INVARIANTS_HPP
#define TTK_INVARIANTS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ttk/braid.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix identity_matrix(int k);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

// Determinant by fraction-free (Bareiss) elimination; every interior
// division is exact over Z[t, t^-1].
LaurentPoly poly_det(PolyMatrix m);

// Reduced Burau image of a single letter on `strands` strands, a
// (strands-1) x (strands-1) matrix.  Convention (sigma_1 block [[-t,0],[1,1]],
// interior block [[1,t,0],[0,-t,0],[0,1,1]], top block [[1,t],[0,-t]]) is
// pinned by the torus oracle on (2,3).
PolyMatrix reduced_burau(int strands, int letter);

using BurauGenerator = std::function<PolyMatrix(int strands, int letter)>;

// Normalized Alexander polynomial of the closure of b (which must be a
// knot): det(rho(b) - I) * (t-1) / (t^strands - 1), then symmetric
// normalization.  A division failure or Delta(1) != +-1 signals a broken
// Burau convention and raises internal_error.
LaurentPoly alexander(const BraidWord& b);

// Same computation against an arbitrary generator image; test hook for the
// corrupted-convention negative control.
LaurentPoly alexander_with(const BraidWord& b, const BurauGenerator& gen);

// Closed form (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)), normalized.
LaurentPoly torus_alexander(long long p, long long q);

// |Delta(-1)| of the closure knot.
Int knot_determinant(const BraidWord& b);

// Jones polynomial via the Kauffman bracket state sum, or nullopt when the
// diagram has more than `cap` crossings (2^crossings states).  Convention:
// (sigma_1)^3 on 2 strands yields -t^-4 + t^-3 + t^-1.
std::optional<LaurentPoly> jones_capped(const BraidWord& b, int cap);

struct InvariantReport {
  LaurentPoly alexander;
  Int determinant;
  std::optional<LaurentPoly> jones;
  long long crossing_count = 0;
};

InvariantReport invariant_report(const BraidWord& b, int jones_cap);

enum class OracleVerdict { consistent, inconsistent, inconclusive };

// For r in {0,1}: does the Burau route agree with the closed torus form?
// Alexander equality is necessary, not sufficient, for torus type; a
// consistent verdict is evidence, not certainty.  r > 1 is inconclusive.
OracleVerdict torus_oracle_check(const TTKParams& params);

struct OracleFailure {
  std::string check;
  std::string detail;
};

struct OracleResult {
  int checks_run = 0;
  std::vector<OracleFailure> failures;

  bool ok() const { return failures.empty(); }
};

struct OracleOptions {
  long long max_pq = 8;       // torus grid bound
  long long max_f = 3;        // torus grid twist range
  int samples = 50;           // symmetry sample count
  long long max_crossings = 14;
  unsigned long long seed = 20260810ull;
};

// Torus grid: every coprime 2 <= p < q <= max_pq, r in {0,1},
// f in [-max_f, max_f].  Runs the (2,3) convention pin first and aborts the
// grid if it fails.
OracleResult run_torus_oracle(const OracleOptions& opts);
OracleResult run_torus_oracle(const OracleOptions& opts,
                              const BurauGenerator& gen);

// Random knot-closure TTK braids: Alexander palindromicity and
// Delta(1) = +-1.
OracleResult run_symmetry_oracle(const OracleOptions& opts);

// Deterministic sampler used by the symmetry oracle and tests: valid params
// whose braid closes to a knot within the crossing budget.
std::vector<TTKParams> sample_knot_params(int count, long long max_crossings,
                                          unsigned long long seed);

bool is_palindromic(const LaurentPoly& normalized);

}  // namespace ttk

#endif
