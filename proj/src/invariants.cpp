#include "ttk/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace ttk {

PolyMatrix identity_matrix(int k) {
  PolyMatrix m(k, std::vector<LaurentPoly>(k));
  for (int i = 0; i < k; ++i) m[i][i] = LaurentPoly::constant(1);
  return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int m = n ? static_cast<int>(b[0].size()) : 0;
  const int k = static_cast<int>(b.size());
  PolyMatrix out(n, std::vector<LaurentPoly>(m));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        if (b[l][j].is_zero()) continue;
        out[i][j] += a[i][l] * b[l][j];
      }
    }
  return out;
}

LaurentPoly poly_det(PolyMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::constant(1);
  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(1);
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!m[i][k].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return LaurentPoly();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = poly_div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

PolyMatrix reduced_burau(int strands, int letter) {
  const int k = strands - 1;
  const int i = std::abs(letter);
  if (i < 1 || i > k) throw invalid_input("letter out of range for burau");
  PolyMatrix m = identity_matrix(k);
  const LaurentPoly t = LaurentPoly::variable();
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  const int c = i - 1;  // 0-based column of the generator
  if (letter > 0) {
    m[c][c] = -t;
    if (c > 0) m[c - 1][c] = t;
    if (c + 1 < k) m[c + 1][c] = LaurentPoly::constant(1);
  } else {
    m[c][c] = -tinv;
    if (c > 0) m[c - 1][c] = LaurentPoly::constant(1);
    if (c + 1 < k) m[c + 1][c] = tinv;
  }
  return m;
}

namespace {

// rho(b) accumulated letter by letter.  The stock generator images differ
// from the identity in a single column, so only that column of the running
// product needs recomputing; arbitrary generators (test hooks) fall back to
// a full multiply.
PolyMatrix burau_image(const BraidWord& b, const BurauGenerator& gen,
                       bool single_column_generators) {
  const int k = b.strands - 1;
  PolyMatrix acc = identity_matrix(k);
  for (int letter : b.letters) {
    const PolyMatrix g = gen(b.strands, letter);
    if (!single_column_generators) {
      acc = mat_mul(acc, g);
      continue;
    }
    const int c = std::abs(letter) - 1;
    std::vector<LaurentPoly> col(k);
    for (int row = 0; row < k; ++row) {
      LaurentPoly sum;
      for (int l = std::max(0, c - 1); l <= std::min(k - 1, c + 1); ++l) {
        if (g[l][c].is_zero() || acc[row][l].is_zero()) continue;
        sum += acc[row][l] * g[l][c];
      }
      col[row] = std::move(sum);
    }
    for (int row = 0; row < k; ++row) acc[row][c] = std::move(col[row]);
  }
  return acc;
}

}  // namespace

namespace {

LaurentPoly alexander_impl(const BraidWord& b, const BurauGenerator& gen,
                           bool single_column_generators) {
  if (component_count(b) != 1)
    throw unsupported_parameter(
        "alexander requires a knot closure (got " +
        std::to_string(component_count(b)) + " components)");
  const int k = b.strands - 1;
  PolyMatrix m = burau_image(b, gen, single_column_generators);
  for (int i = 0; i < k; ++i) m[i][i] -= LaurentPoly::constant(1);
  LaurentPoly delta;
  try {
    const LaurentPoly det = poly_det(std::move(m));
    delta = poly_div_exact(det * LaurentPoly::power_minus_one(1),
                           LaurentPoly::power_minus_one(b.strands));
  } catch (const inexact_division& e) {
    throw internal_error(std::string("burau correction factor failed: ") +
                         e.what());
  }
  if (delta.is_zero())
    throw internal_error("vanishing alexander polynomial for a knot closure");
  delta = normalize_symmetric(delta);
  const Int at_one = delta.eval_at_one();
  if (at_one != 1 && at_one != -1)
    throw internal_error("alexander value at 1 is " + at_one.str() +
                         ", expected +-1");
  return delta;
}

}  // namespace

LaurentPoly alexander_with(const BraidWord& b, const BurauGenerator& gen) {
  return alexander_impl(b, gen, /*single_column_generators=*/false);
}

LaurentPoly alexander(const BraidWord& b) {
  return alexander_impl(
      b,
      [](int strands, int letter) { return reduced_burau(strands, letter); },
      /*single_column_generators=*/true);
}

LaurentPoly torus_alexander(long long p, long long q) {
  if (p < 2 || q < 2) throw invalid_input("torus parameters must exceed 1");
  if (gcd_ll(p, q) != 1)
    throw invalid_input("torus parameters must be coprime");
  const LaurentPoly numer =
      LaurentPoly::power_minus_one(p * q) * LaurentPoly::power_minus_one(1);
  LaurentPoly out = poly_div_exact(numer, LaurentPoly::power_minus_one(p));
  out = poly_div_exact(out, LaurentPoly::power_minus_one(q));
  return normalize_symmetric(out);
}

Int knot_determinant(const BraidWord& b) {
  const Int v = alexander(b).eval_at_minus_one();
  return v < 0 ? Int(-v) : v;
}

namespace {

// Union-find over wire segments of a smoothed closure diagram.
struct Loops {
  std::vector<int> parent;

  void reset(int n) {
    parent.resize(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::optional<LaurentPoly> jones_capped(const BraidWord& b, int cap) {
  if (component_count(b) != 1)
    throw unsupported_parameter("jones requires a knot closure");
  const int k = static_cast<int>(b.letters.size());
  if (k > cap) return std::nullopt;

  const int n = b.strands;
  const int max_ids = n + k;
  // counts[exp + k][loops] over all 2^k smoothing states, with exp the net
  // A-exponent and loops the circle count
  std::vector<std::vector<unsigned long long>> counts(
      2 * k + 1, std::vector<unsigned long long>(max_ids + 1, 0));

  Loops uf;
  std::vector<int> wire(n);
  for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
    uf.reset(max_ids);
    for (int i = 0; i < n; ++i) wire[i] = i;
    int next_id = n;
    int exp = 0;
    for (int c = 0; c < k; ++c) {
      const bool a_choice = ((mask >> c) & 1) == 0;
      exp += a_choice ? 1 : -1;
      const bool positive = b.letters[c] > 0;
      // A-smoothing of a positive crossing keeps the strands parallel; the
      // mirror crossing swaps the two smoothings.
      const bool vertical = (a_choice == positive);
      if (!vertical) {
        const int j = std::abs(b.letters[c]) - 1;
        uf.unite(wire[j], wire[j + 1]);
        wire[j] = wire[j + 1] = next_id++;
      }
    }
    for (int i = 0; i < n; ++i) uf.unite(wire[i], i);
    int loops = 0;
    for (int i = 0; i < next_id; ++i)
      if (uf.find(i) == i) ++loops;
    ++counts[exp + k][loops];
  }

  // delta = -A^2 - A^-2; bracket = sum A^exp * delta^(loops-1)
  const LaurentPoly delta = LaurentPoly::monomial(-1, 2) +
                            LaurentPoly::monomial(-1, -2);
  std::vector<LaurentPoly> delta_pow(max_ids + 1);
  delta_pow[0] = LaurentPoly::constant(1);
  for (int i = 1; i <= max_ids; ++i) delta_pow[i] = delta_pow[i - 1] * delta;

  LaurentPoly bracket;
  for (int e = -k; e <= k; ++e)
    for (int loops = 1; loops <= max_ids; ++loops) {
      const unsigned long long c = counts[e + k][loops];
      if (!c) continue;
      bracket += LaurentPoly::monomial(Int(c), e) * delta_pow[loops - 1];
    }

  // writhe normalization f = (-A^3)^(-w) * bracket, then t = A^4
  const long long w = exponent_sum(b);
  LaurentPoly f = bracket.shifted(-3 * w);
  if (w % 2 != 0) f = -f;
  LaurentPoly jones;
  for (const auto& [e, c] : f.terms()) {
    if (e % 4 != 0)
      throw internal_error("bracket exponent not divisible by 4 on a knot");
    jones.add_term(e / 4, c);
  }
  return jones;
}

InvariantReport invariant_report(const BraidWord& b, int jones_cap) {
  InvariantReport rep;
  rep.alexander = alexander(b);
  const Int v = rep.alexander.eval_at_minus_one();
  rep.determinant = v < 0 ? Int(-v) : v;
  rep.jones = jones_capped(b, jones_cap);
  rep.crossing_count = static_cast<long long>(b.crossing_count());
  return rep;
}

OracleVerdict torus_oracle_check(const TTKParams& params) {
  validate(params);
  if (params.r > 1) return OracleVerdict::inconclusive;
  const LaurentPoly via_burau = alexander(ttk_braid(params));
  const LaurentPoly closed_form = torus_alexander(params.p, params.q);
  return via_burau == closed_form ? OracleVerdict::consistent
                                  : OracleVerdict::inconsistent;
}

bool is_palindromic(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (p.coeff(-e) != c) return false;
  return true;
}

OracleResult run_torus_oracle(const OracleOptions& opts) {
  return run_torus_oracle(opts, [](int strands, int letter) {
    return reduced_burau(strands, letter);
  });
}

OracleResult run_torus_oracle(const OracleOptions& opts,
                              const BurauGenerator& gen) {
  OracleResult res;
  auto check_point = [&](const TTKParams& params) {
    ++res.checks_run;
    std::ostringstream name;
    name << "torus(" << params.p << "," << params.q << "," << params.r << ","
         << params.s << ")";
    try {
      const LaurentPoly via_burau = alexander_with(ttk_braid(params), gen);
      const LaurentPoly closed_form = torus_alexander(params.p, params.q);
      if (!(via_burau == closed_form)) {
        res.failures.push_back(
            {name.str(), "burau route " + to_string(via_burau) +
                             " != closed form " + to_string(closed_form)});
        return false;
      }
      return true;
    } catch (const error& e) {
      res.failures.push_back({name.str(), e.what()});
      return false;
    }
  };

  // Convention pin: (2,3) must agree before the grid means anything.
  if (!check_point({2, 3, 0, 0})) return res;

  for (long long p = 2; p <= opts.max_pq; ++p)
    for (long long q = p + 1; q <= opts.max_pq; ++q) {
      if (gcd_ll(p, q) != 1) continue;
      for (long long r = 0; r <= 1; ++r)
        for (long long f = -opts.max_f; f <= opts.max_f; ++f)
          check_point({p, q, r, f});
    }
  return res;
}

std::vector<TTKParams> sample_knot_params(int count, long long max_crossings,
                                          unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<TTKParams> out;
  while (static_cast<int>(out.size()) < count) {
    TTKParams params;
    params.p = 2 + static_cast<long long>(rng() % 7);
    params.q = 2 + static_cast<long long>(rng() % 7);
    if (gcd_ll(params.p, params.q) != 1) continue;
    params.r = static_cast<long long>(rng() % (params.p + 1));
    params.s = static_cast<long long>(rng() % 7) - 3;
    if (ttk_crossing_count(params) > max_crossings) continue;
    if (component_count(ttk_braid(params)) != 1) continue;
    out.push_back(params);
  }
  return out;
}

OracleResult run_symmetry_oracle(const OracleOptions& opts) {
  OracleResult res;
  const std::vector<TTKParams> sample =
      sample_knot_params(opts.samples, opts.max_crossings, opts.seed);
  for (const TTKParams& params : sample) {
    ++res.checks_run;
    std::ostringstream name;
    name << "symmetry(" << params.p << "," << params.q << "," << params.r
         << "," << params.s << ")";
    try {
      const LaurentPoly delta = alexander(ttk_braid(params));
      if (!is_palindromic(delta))
        res.failures.push_back(
            {name.str(), "alexander not palindromic: " + to_string(delta)});
      const Int at_one = delta.eval_at_one();
      if (at_one != 1 && at_one != -1)
        res.failures.push_back(
            {name.str(), "delta(1) = " + at_one.str() + ", expected +-1"});
    } catch (const error& e) {
      res.failures.push_back({name.str(), e.what()});
    }
  }
  return res;
}

}  // namespace ttk
