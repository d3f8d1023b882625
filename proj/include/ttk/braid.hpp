#ifndef TTK_BRAID_HPP
#define TTK_BRAID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ttk/errors.hpp"

namespace ttk {

// Signed word in the braid generators: letter i (1-based) is sigma_i,
// letter -i its inverse, 1 <= |i| < strands.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  std::size_t crossing_count() const { return letters.size(); }
};

// Validating constructor; throws invalid_input on out-of-range letters.
BraidWord make_braid(int strands, std::vector<int> letters);

// Twisted torus knot parameters T(p, q, r, s): p, q coprime and > 1,
// 0 <= r <= p, s any integer.
struct TTKParams {
  long long p = 2;
  long long q = 3;
  long long r = 0;
  long long s = 0;

  friend bool operator==(const TTKParams&, const TTKParams&) = default;
};

// Throws invalid_input for gcd/p/q/r violations and unsupported_parameter
// for r > p (a regime the braid form below does not realize).
void validate(const TTKParams& params);
bool is_valid(const TTKParams& params);

// 1 < r < p < q, the hypothesis regime of the twisted bounds
bool twisted_regime(const TTKParams& params);

// Braid representative (sigma_1 ... sigma_{p-1})^q (sigma_1 ... sigma_{r-1})^{rs}
// on p strands; the twist factor is empty for r <= 1 and its letters all
// carry the sign of s.
BraidWord ttk_braid(const TTKParams& params);

// Closed formulas for the word statistics above, usable when the word itself
// would be too large to materialize.
long long ttk_crossing_count(const TTKParams& params);
long long ttk_exponent_sum(const TTKParams& params);

// Permutation of {0..strands-1} induced by reading letters left to right
// (sign-insensitive): perm[i] is where the strand entering at position i
// exits.
std::vector<int> closure_permutation(const BraidWord& b);

// Number of cycles of the closure permutation = components of the closure.
int component_count(const BraidWord& b);

// Sum of letter signs (writhe of the closed diagram).
long long exponent_sum(const BraidWord& b);

// Mirror image: every letter negated.  Utility for negative-q torus knots,
// which are not a TTKParams case.
BraidWord mirror(const BraidWord& b);

// Plain-text form "s:3 w:1 2 1 2 1 1" for CLI piping.
std::string to_text(const BraidWord& b);
BraidWord parse_braid_text(const std::string& text);

long long gcd_ll(long long a, long long b);

}  // namespace ttk

#endif
