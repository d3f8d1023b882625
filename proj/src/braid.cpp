#include "ttk/braid.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace ttk {

long long gcd_ll(long long a, long long b) {
  return std::gcd(a, b);
}

BraidWord make_braid(int strands, std::vector<int> letters) {
  if (strands < 1) throw invalid_input("braid needs at least one strand");
  for (int k : letters) {
    if (k == 0 || std::abs(k) > strands - 1)
      throw invalid_input("letter " + std::to_string(k) +
                          " out of range for " + std::to_string(strands) +
                          " strands");
  }
  return BraidWord{strands, std::move(letters)};
}

void validate(const TTKParams& params) {
  if (params.p < 2 || params.q < 2)
    throw invalid_input("p and q must be integers greater than 1");
  if (gcd_ll(params.p, params.q) != 1)
    throw invalid_input("p and q must be coprime");
  if (params.r < 0) throw invalid_input("r must be nonnegative");
  if (params.r > params.p)
    throw unsupported_parameter(
        "r > p is not realized by this braid form; only 0 <= r <= p of the "
        "wider 0 <= r <= p+q definition is supported");
}

bool is_valid(const TTKParams& params) {
  try {
    validate(params);
    return true;
  } catch (const error&) {
    return false;
  }
}

bool twisted_regime(const TTKParams& params) {
  return 1 < params.r && params.r < params.p && params.p < params.q;
}

BraidWord ttk_braid(const TTKParams& params) {
  validate(params);
  const long long p = params.p, q = params.q, r = params.r, s = params.s;
  BraidWord b;
  b.strands = static_cast<int>(p);
  b.letters.reserve(static_cast<std::size_t>(ttk_crossing_count(params)));
  for (long long rep = 0; rep < q; ++rep)
    for (long long i = 1; i < p; ++i) b.letters.push_back(static_cast<int>(i));
  if (r >= 2 && s != 0) {
    const long long reps = r * std::llabs(s);
    if (s > 0) {
      for (long long rep = 0; rep < reps; ++rep)
        for (long long i = 1; i < r; ++i)
          b.letters.push_back(static_cast<int>(i));
    } else {
      for (long long rep = 0; rep < reps; ++rep)
        for (long long i = r - 1; i >= 1; --i)
          b.letters.push_back(static_cast<int>(-i));
    }
  }
  return b;
}

namespace {

long long narrow_128(__int128 v, const char* what) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw invalid_input(std::string(what) + " overflows 64 bits");
  return static_cast<long long>(v);
}

}  // namespace

long long ttk_crossing_count(const TTKParams& params) {
  __int128 twist = 0;
  if (params.r >= 2)
    twist = static_cast<__int128>(params.r - 1) * params.r *
            std::llabs(params.s);
  return narrow_128(static_cast<__int128>(params.p - 1) * params.q + twist,
                    "crossing count");
}

long long ttk_exponent_sum(const TTKParams& params) {
  __int128 twist = 0;
  if (params.r >= 2)
    twist = static_cast<__int128>(params.r - 1) * params.r * params.s;
  return narrow_128(static_cast<__int128>(params.p - 1) * params.q + twist,
                    "exponent sum");
}

std::vector<int> closure_permutation(const BraidWord& b) {
  // at_pos[x] = strand currently occupying position x
  std::vector<int> at_pos(b.strands);
  for (int i = 0; i < b.strands; ++i) at_pos[i] = i;
  for (int k : b.letters) {
    const int j = std::abs(k) - 1;
    std::swap(at_pos[j], at_pos[j + 1]);
  }
  std::vector<int> perm(b.strands);
  for (int x = 0; x < b.strands; ++x) perm[at_pos[x]] = x;
  return perm;
}

int component_count(const BraidWord& b) {
  const std::vector<int> perm = closure_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j]))
      seen[j] = true;
  }
  return cycles;
}

long long exponent_sum(const BraidWord& b) {
  long long sum = 0;
  for (int k : b.letters) sum += (k > 0) ? 1 : -1;
  return sum;
}

BraidWord mirror(const BraidWord& b) {
  BraidWord out = b;
  for (int& k : out.letters) k = -k;
  return out;
}

std::string to_text(const BraidWord& b) {
  std::ostringstream os;
  os << "s:" << b.strands << " w:";
  for (std::size_t i = 0; i < b.letters.size(); ++i) {
    if (i) os << ' ';
    os << b.letters[i];
  }
  return os.str();
}

BraidWord parse_braid_text(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  if (!(is >> tok) || tok.rfind("s:", 0) != 0)
    throw invalid_input("braid text must start with s:<strands>");
  int strands = 0;
  try {
    strands = std::stoi(tok.substr(2));
  } catch (const std::exception&) {
    throw invalid_input("bad strand count in braid text");
  }
  std::vector<int> letters;
  bool saw_w = false;
  while (is >> tok) {
    if (!saw_w) {
      if (tok == "w:") {
        saw_w = true;
        continue;
      }
      if (tok.rfind("w:", 0) == 0) {
        saw_w = true;
        tok = tok.substr(2);
        if (tok.empty()) continue;
      } else {
        throw invalid_input("expected w: before letters");
      }
    }
    try {
      letters.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw invalid_input("bad letter '" + tok + "' in braid text");
    }
  }
  if (!saw_w) throw invalid_input("braid text missing w: section");
  return make_braid(strands, std::move(letters));
}

}  // namespace ttk
