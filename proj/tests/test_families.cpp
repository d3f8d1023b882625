#include <doctest.h>

#include <cstdlib>
#include <random>

#include "ttk/families.hpp"

using ttk::CertState;
using ttk::GapCertificate;
using ttk::TTKParams;
using ttk::TwistPair;

namespace {

const TwistPair kFigure3 = ttk::make_twist_pair(1, 1, 2, 3, 1, 1);

}

TEST_CASE("pair validation") {
  CHECK_NOTHROW(ttk::make_twist_pair(1, 1, 2, 3, 1, 1));
  CHECK_NOTHROW(ttk::make_twist_pair(1, 1, 5, 7, 2, 3));  // generic regime
  // d < c violates the torus regime
  CHECK_THROWS_AS(ttk::make_twist_pair(2, 1, 3, 2, 1, 1),
                  ttk::unsupported_pair);
  // f = 0 leaves the surface slope at cd
  CHECK_THROWS_AS(ttk::make_twist_pair(1, 1, 2, 3, 1, 0),
                  ttk::unsupported_pair);
  // alpha and beta of the same knotted type
  CHECK_THROWS_AS(ttk::make_twist_pair(2, 3, 2, 3, 1, 1),
                  ttk::unsupported_pair);
  // knotted alpha of the same unordered type, either orientation order
  CHECK_THROWS_AS(ttk::make_twist_pair(3, 2, 2, 3, 1, 1),
                  ttk::unsupported_pair);
  // an unknotted alpha always differs from a knotted beta
  CHECK_NOTHROW(ttk::make_twist_pair(1, 2, 2, 3, 1, 1));
  // non-coprime alpha
  CHECK_THROWS_AS(ttk::make_twist_pair(2, 4, 2, 3, 1, 1),
                  ttk::unsupported_pair);
  // disjoint curves
  CHECK_THROWS_AS(ttk::make_twist_pair(0, 0, 2, 3, 1, 1),
                  ttk::unsupported_pair);
  // generic regime needs 1 < e < c < d
  CHECK_THROWS_AS(ttk::make_twist_pair(1, 1, 5, 7, 5, 3),
                  ttk::unsupported_pair);
}

TEST_CASE("delta") {
  CHECK(ttk::delta(kFigure3) == 1);
  CHECK(ttk::delta(TwistPair{2, 1, 3, 2, 1, 1,
                             TwistPair::Regime::torus_beta}) == 1);
  CHECK(ttk::delta(TwistPair{1, 0, 0, 1, 1, 1,
                             TwistPair::Regime::torus_beta}) == 1);
  CHECK(ttk::delta(ttk::make_twist_pair(1, 1, 5, 7, 2, 3)) == 2);
}

TEST_CASE("twist and min_n") {
  CHECK(ttk::min_n(kFigure3) == 2);

  const TTKParams t5 = ttk::twist(kFigure3, 5);
  CHECK(t5 == TTKParams{11, 16, 5, 1});

  // n = 1 gives r = 1, outside the twisted regime
  CHECK_THROWS_AS(ttk::twist(kFigure3, 1), ttk::needs_larger_n);
  try {
    ttk::twist(kFigure3, 1);
  } catch (const ttk::needs_larger_n& e) {
    CHECK(e.min_valid_n() == 2);
  }

  // delta = 2 pair clears all constraints at n = 1
  const TwistPair wide = ttk::make_twist_pair(1, 1, 5, 7, 2, 3);
  CHECK(ttk::min_n(wide) == 1);
  CHECK(ttk::twist(wide, 1) == TTKParams{11, 15, 4, 3});

  SUBCASE("berge corollary form") {
    for (long long m = 2; m <= 5; ++m) {
      const TwistPair pair = ttk::make_twist_pair(1, 1, m, m + 1, 1, 1);
      for (long long n = 2; n <= 6; ++n)
        CHECK(ttk::twist(pair, n) ==
              TTKParams{m * n + 1, m * n + n + 1, n, 1});
    }
  }

  SUBCASE("the inequalities persist above min_n") {
    for (const TwistPair& pair :
         {kFigure3, ttk::make_twist_pair(1, 1, 5, 7, 2, 3),
          ttk::make_twist_pair(1, 2, 3, 4, 1, -2)}) {
      const long long base = ttk::min_n(pair);
      for (long long n = base; n <= 10 * base; ++n) {
        TTKParams t;
        try {
          t = ttk::twist(pair, n);
        } catch (const ttk::needs_larger_n&) {
          continue;  // sporadic gcd failure; inequalities still checked below
        }
        CHECK(ttk::twisted_regime(t));
      }
    }
  }
}

TEST_CASE("catching surface euler characteristic") {
  CHECK(ttk::catching_chi(kFigure3) == -4);
  // dean kind one defining pair, m = 2
  CHECK(ttk::catching_chi(TwistPair{2, 1, 3, 2, 1, 1,
                                    TwistPair::Regime::torus_beta}) == -6);
  for (long long m = 2; m <= 6; ++m)
    CHECK(ttk::catching_chi(TwistPair{2, 1, 2 * m - 1, m, 1, 1,
                                      TwistPair::Regime::torus_beta}) ==
          2 - 4 * m);
  // (1,1) alpha gives 1 - c - d
  for (long long c = 2; c <= 5; ++c)
    CHECK(ttk::catching_chi(TwistPair{1, 1, c, c + 1, 1, 1,
                                      TwistPair::Regime::torus_beta}) ==
          1 - c - (c + 1));
  // chi >= 0 is rejected
  CHECK_THROWS_AS(ttk::catching_chi(TwistPair{0, 1, 1, 2, 1, 1,
                                              TwistPair::Regime::torus_beta}),
                  ttk::unsupported_pair);
}

TEST_CASE("published denominator equals -36 chi(Q) on random pairs") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    TwistPair pair;
    pair.a = static_cast<long long>(rng() % 9) - 4;
    pair.b = static_cast<long long>(rng() % 9) - 4;
    pair.c = static_cast<long long>(rng() % 6) + 1;
    pair.d = static_cast<long long>(rng() % 6) + 1;
    long long chi;
    try {
      chi = ttk::catching_chi(pair);
    } catch (const ttk::unsupported_pair&) {
      continue;
    }
    // b1_lower asserts the identity internally; reaching a value means the
    // cross-check between the two published formulas held
    CHECK(ttk::b1_lower(pair, 100) == ttk::bgl_lower_bound(100, chi, 1));
  }
}

TEST_CASE("b1 lower bound values") {
  CHECK(ttk::b1_lower(kFigure3, 3024) == 10);
  CHECK(ttk::b1_lower(kFigure3, 1296) == 4);
  CHECK(ttk::b1_lower(kFigure3, 144) == 0);
}

TEST_CASE("primitivity congruences") {
  CHECK(ttk::primitive_h1({7, 10, 3, 1}));   // r = q mod p
  CHECK_FALSE(ttk::primitive_h1({7, 9, 3, 1}));
  CHECK(ttk::primitive_h1({7, 9, 8, 1}));    // 8 = 1 mod 7 (r > p allowed)
  CHECK(ttk::primitive_h2({7, 9, 2, 1}));    // 2 = -7 mod 9
  CHECK_FALSE(ttk::primitive_h2({7, 9, 3, 2}));  // s != +-1
  CHECK_FALSE(ttk::primitive_h2({7, 9, 3, 1}));

  SUBCASE("tunnel number one composes the two tests") {
    CHECK(ttk::tunnel_number_one({7, 10, 3, 5}) == CertState::certified);
    CHECK(ttk::tunnel_number_one({7, 9, 3, 2}) == CertState::unknown);
    CHECK(ttk::tunnel_number_one({7, 9, 8, 5}) == CertState::certified);
  }
}

TEST_CASE("berge family members") {
  const auto m2n3 = ttk::berge_family(2, 3, 1);
  CHECK(m2n3.params == TTKParams{7, 10, 3, 1});
  CHECK(m2n3.primitive_h1);
  CHECK(m2n3.primitive_h2);

  CHECK(ttk::berge_family(3, 1, 1).params == TTKParams{4, 5, 1, 1});
  CHECK(ttk::berge_family(2, 1, -1).params == TTKParams{3, 4, 1, -1});

  CHECK_THROWS_AS(ttk::berge_family(1, 3, 1), ttk::invalid_input);
  CHECK_THROWS_AS(ttk::berge_family(2, 0, 1), ttk::invalid_input);
  CHECK_THROWS_AS(ttk::berge_family(2, 3, 2), ttk::invalid_input);

  SUBCASE("doubly primitive across a sweep") {
    for (long long m = 2; m <= 6; ++m)
      for (long long n = 1; n <= 40; ++n)
        for (int sign : {1, -1}) {
          const auto mem = ttk::berge_family(m, n, sign);
          CHECK(mem.primitive_h1);
          CHECK(mem.primitive_h2);
        }
  }
}

TEST_CASE("dean family members") {
  SUBCASE("kind one") {
    const auto mem = ttk::dean_family(ttk::DeanKind::one, {}, 2, 3, 1);
    CHECK(mem.params == TTKParams{11, 7, 3, 1});
    CHECK(mem.params.r == 2 * mem.params.q - mem.params.p);
    CHECK(mem.constraints_ok);

    // n = 1 gives r = 1 and a degenerate range
    CHECK_THROWS_AS(ttk::dean_family(ttk::DeanKind::one, {}, 2, 1, 1),
                    ttk::needs_larger_n);
    try {
      ttk::dean_family(ttk::DeanKind::one, {}, 2, 1, 1);
    } catch (const ttk::needs_larger_n& e) {
      CHECK(e.min_valid_n() == 2);
    }
  }

  SUBCASE("kind two") {
    const auto mem = ttk::dean_family(ttk::DeanKind::two, 2, 2, 2, 1);
    CHECK(mem.params == TTKParams{12, 5, 2, 1});
    CHECK(mem.params.r == mem.params.p - 2 * mem.params.q);
    CHECK_THROWS_AS(ttk::dean_family(ttk::DeanKind::two, {}, 2, 2, 1),
                    ttk::invalid_input);
  }

  SUBCASE("emitted tuples re-validate their identities") {
    for (long long m = 2; m <= 5; ++m)
      for (long long n = 2; n <= 25; ++n) {
        const auto one = ttk::dean_family(ttk::DeanKind::one, {}, m, n, 1);
        CHECK(one.params.r == 2 * one.params.q - one.params.p);
        CHECK(2 * one.params.q > one.params.p + 1);
        CHECK(one.params.q < one.params.p);
        for (long long l = 2; l <= 4; ++l) {
          const auto two = ttk::dean_family(ttk::DeanKind::two, l, m, n, -1);
          CHECK(two.params.r == two.params.p - l * two.params.q);
          CHECK(two.params.q > 1);
          CHECK(2 * two.params.q < two.params.p);
          CHECK(l * two.params.q <= two.params.p - 2);
        }
      }
  }
}

TEST_CASE("hyperbolicity via the b1 route") {
  const auto big = ttk::berge_family(2, 1296, 1);
  CHECK(ttk::hyperbolic_via_b1(big.params, big.pair, 1296) ==
        CertState::certified);

  const auto small = ttk::berge_family(2, 10, 1);
  CHECK(ttk::hyperbolic_via_b1(small.params, small.pair, 10) ==
        CertState::unknown);

  // params not arising from the pair are rejected
  CHECK_THROWS_AS(ttk::hyperbolic_via_b1({7, 9, 4, 1}, big.pair, 1296),
                  ttk::invalid_input);
}

TEST_CASE("distance two certificates") {
  const auto issued = ttk::distance_two_certificate(2, 1296, 1);
  CHECK(issued.issued);
  CHECK(issued.params == TTKParams{2593, 3889, 1296, 1});
  CHECK(issued.b1_lower == 4);

  const auto refused = ttk::distance_two_certificate(2, 2, 1);
  CHECK_FALSE(refused.issued);
  CHECK(refused.refusal_reason.find("genus-one lower bound") !=
        std::string::npos);

  SUBCASE("m = 5 threshold from the bgl formula") {
    // chi(Q) = 1 - 5 - 6 = -10, so b1 >= 2 needs n > 3 * 360
    CHECK_FALSE(ttk::distance_two_certificate(5, 1080, 1).issued);
    CHECK(ttk::distance_two_certificate(5, 1081, 1).issued);
  }
}

TEST_CASE("gap certificates") {
  SUBCASE("the acceptance-pinned instance") {
    const GapCertificate cert = ttk::certify_gaps(3, kFigure3);
    CHECK(cert.n == 1296);
    CHECK(cert.params == TTKParams{2593, 3889, 1296, 46675});
    CHECK(cert.s == 46675);
    CHECK(cert.chi_q == -4);
    CHECK(cert.b0 == 2593);
    CHECK(cert.b1_lower == 4);
    CHECK(cert.b1_upper == 1296);
    CHECK(cert.b2_upper == 1);
    CHECK(cert.gap0 == 1297);
    CHECK(cert.gap1 == 3);
    CHECK(cert.tunnel_one);
    CHECK(cert.hypothesis_chain.size() == 6);
  }

  SUBCASE("C = 1 lands at n = 720") {
    const GapCertificate cert = ttk::certify_gaps(1, kFigure3);
    CHECK(cert.n == 720);
    CHECK(cert.b1_lower == 2);
  }

  SUBCASE("C = 10 lands at n = 3312") {
    const GapCertificate cert = ttk::certify_gaps(10, kFigure3);
    CHECK(cert.n == 3312);
    CHECK(cert.b1_lower == 11);
  }

  SUBCASE("negative f flips the sign of s") {
    const TwistPair pair = ttk::make_twist_pair(1, 1, 2, 3, 1, -1);
    const GapCertificate cert = ttk::certify_gaps(2, pair);
    CHECK(cert.s < 0);
    CHECK(-cert.s > 18 * cert.params.p);
  }

  SUBCASE("issued certificates satisfy their own invariants") {
    for (long long m = 2; m <= 6; ++m)
      for (long long C = 1; C <= 12; ++C) {
        const TwistPair pair = ttk::make_twist_pair(1, 1, m, m + 1, 1, 1);
        const GapCertificate cert = ttk::certify_gaps(C, pair);
        CHECK(cert.gap0 == cert.b0 - cert.b1_upper);
        CHECK(cert.gap1 == cert.b1_lower - cert.b2_upper);
        CHECK(cert.gap0 >= C);
        CHECK(cert.gap1 >= C);
        CHECK(cert.b1_lower <= cert.b1_upper);
        CHECK(cert.b0 == cert.params.p);
        CHECK(std::abs(cert.s) > 18 * cert.params.p);
        CHECK(ttk::twisted_regime(cert.params));
        CHECK(cert.params.r % cert.params.p != 0);
        CHECK(cert.params.r % cert.params.q != 0);
      }
  }

  SUBCASE("rebuilding from the inputs reproduces every field") {
    const GapCertificate cert = ttk::certify_gaps(4, kFigure3);
    const GapCertificate again =
        ttk::build_certificate(cert.C, cert.pair, cert.n, cert.s);
    CHECK(again.params == cert.params);
    CHECK(again.b0 == cert.b0);
    CHECK(again.b1_lower == cert.b1_lower);
    CHECK(again.b1_upper == cert.b1_upper);
    CHECK(again.gap0 == cert.gap0);
    CHECK(again.gap1 == cert.gap1);
    CHECK(again.hypothesis_chain.size() == cert.hypothesis_chain.size());
  }

  SUBCASE("hypothesis failures are typed") {
    // |s| = 18p exactly is rejected
    const GapCertificate cert = ttk::certify_gaps(2, kFigure3);
    CHECK_THROWS_AS(
        ttk::build_certificate(cert.C, cert.pair, cert.n,
                               18 * cert.params.p),
        ttk::certificate_invalid);
    // n = 1 is outside the twisted regime
    CHECK_THROWS_AS(ttk::build_certificate(2, kFigure3, 1, 46675),
                    ttk::certificate_invalid);
    CHECK_THROWS_AS(ttk::certify_gaps(0, kFigure3), ttk::invalid_input);
  }
}
