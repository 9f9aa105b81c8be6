#include <doctest.h>

#include "oracles.hpp"

#include <evenmono/errors.hpp>
#include <evenmono/factor.hpp>
#include <evenmono/hunt.hpp>
#include <evenmono/modpoly.hpp>

using namespace evenmono;

TEST_CASE("canonical form") {
  CHECK(IntPoly{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{-7, 0, 14, 0, -7, 0, 1}.to_string() == "x^6-7x^4+14x^2-7");
}

TEST_CASE("compose_power") {
  CHECK(compose_power(IntPoly{-1, 1, 0, 1}, 2) == IntPoly{-1, 0, 1, 0, 0, 0, 1});
  CHECK(compose_power(IntPoly{-7, 14, -7, 1}, 2) == IntPoly{-7, 0, 14, 0, -7, 0, 1});
  const IntPoly g{3, -1, 4, 1};
  CHECK(compose_power(g, 1) == g);
}

TEST_CASE("sqrt_decompose") {
  CHECK(sqrt_decompose(IntPoly{1, 0, 6, 0, 5, 0, 1}) == IntPoly{1, 6, 5, 1});
  CHECK_FALSE(sqrt_decompose(IntPoly{1, 1, 0, 1}));
  CHECK(sqrt_decompose(IntPoly{0, 0, 0, 0, 1}) == IntPoly{0, 0, 1});
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(IntPoly{1, 0, 5, 0, 6, 0, 1}) == -153664);
  CHECK(discriminant(IntPoly{1, 0, 1, 0, 9, 0, 1}) == -467943424);
  CHECK(discriminant(IntPoly{-2, 0, 1}) == 8);
  CHECK(discriminant(IntPoly{1, 0, 0, 0, 0, 0, 1}) == -46656);
  CHECK(discriminant(IntPoly{1, 1, 9, 1}) == -2704);
  CHECK_THROWS_AS(discriminant(IntPoly{5}), ConstantPolynomial);
}

TEST_CASE("resultant and discriminant agree with the Sylvester determinant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int da = 1 + static_cast<int>(rng() % 8), db = 1 + static_cast<int>(rng() % 8);
    const IntPoly a = oracle::random_poly(rng, da, 20, false);
    const IntPoly b = oracle::random_poly(rng, db, 20, false);
    CHECK(resultant(a, b) == oracle::sylvester_resultant(a, b));
    CHECK(discriminant(a) == oracle::discriminant(a));
  }
}

TEST_CASE("power composition discriminant identity") {
  std::mt19937_64 rng(13);
  for (int q : {1, 3, 5}) {
    for (int trial = 0; trial < 200; ++trial) {
      IntPoly g = oracle::random_poly(rng, q, 30, true);
      if (g.constant() == 0) continue;
      const Int dg = discriminant(g);
      Int expected = dg * dg * g.constant();
      for (int i = 0; i < q; ++i) expected *= -4;
      CHECK(discriminant(compose_power(g, 2)) == expected);
    }
  }
}

TEST_CASE("discriminant identity in the D6 shape") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-10, 10);
  int checked = 0;
  while (checked < 200) {
    const long j = dist(rng), k = dist(rng), c = dist(rng);
    if (c == 0) continue;
    ++checked;
    CHECK(discriminant(family_c6(Int(j * c), Int(k * c), Int(c))) == multiple_shape_disc(j, k, c));
  }
}

TEST_CASE("factor_mod_p examples") {
  const auto f2 = factor_mod_p(ModPoly(2, IntPoly{1, 0, 1}));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].factor == ModPoly(2, IntPoly{1, 1}));
  CHECK(f2[0].exponent == 2);

  const auto f3 = factor_mod_p(ModPoly(3, IntPoly{1, 6, 9, 1}));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].factor == ModPoly(3, IntPoly{1, 1}));
  CHECK(f3[0].exponent == 3);

  const auto f7 = factor_mod_p(ModPoly(7, IntPoly{-7, 0, 14, 0, -7, 0, 1}));
  REQUIRE(f7.size() == 1);
  CHECK(f7[0].factor == ModPoly::x(7));
  CHECK(f7[0].exponent == 6);

  CHECK_THROWS_AS(factor_mod_p(ModPoly(5, IntPoly{})), ZeroPolynomial);
}

TEST_CASE("factor_mod_p reassembles and factors are irreducible") {
  std::mt19937_64 rng(19);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 101, 1000003, 4611686018427387847ULL};
  for (std::uint64_t p : primes) {
    for (int trial = 0; trial < 60; ++trial) {
      IntPoly f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 12), 1000, true);
      if (trial % 3 == 0) f = f * f * oracle::random_poly(rng, 2, 10, true);
      const ModPoly fp(p, f);
      const auto factors = factor_mod_p(fp);
      ModPoly prod = ModPoly::constant(p, 1);
      int total = 0;
      for (const auto& [g, e] : factors) {
        for (unsigned i = 0; i < e; ++i) prod = prod * g;
        total += static_cast<int>(e) * g.degree();
        CHECK(g.leading() == 1);
        // No root-free test for large p; degree <= 3 factors must be root free.
        if (p < 200 && g.degree() <= 3 && g.degree() > 1)
          for (std::uint64_t x = 0; x < p; ++x) {
            ModPoly lin(p, std::vector<std::uint64_t>{(p - x) % p, 1});
            CHECK_FALSE((g % lin).is_zero());
          }
      }
      CHECK(prod == fp.monic());
      CHECK(total == fp.degree());
    }
  }
}

TEST_CASE("factor_over_Z examples") {
  const auto f = factor_over_Z(IntPoly{1, 0, 1, 0, 1, 0, 1});
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].factor == IntPoly{1, 0, 1});
  CHECK(f.factors[1].factor == IntPoly{1, 0, 0, 0, 1});
  CHECK(factor_over_Z(IntPoly{-4, 0, 0, 0, 1}).factors.size() == 2);
  CHECK(factor_over_Z(IntPoly{1, 0, 6, 0, 5, 0, 1}).factors.size() == 1);
  CHECK_THROWS_AS(factor_over_Z(IntPoly{}), ZeroPolynomial);
}

TEST_CASE("factor_over_Z reassembles random products") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly f{1};
    const int parts = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < parts; ++i) f = f * oracle::random_poly(rng, 1 + static_cast<int>(rng() % 5), 9, rng() % 2);
    if (trial % 5 == 0) f = f * Int(-6);
    const ZFactorization z = factor_over_Z(f);
    CHECK(z.expand() == f);
    for (const auto& pf : z.factors) {
      CHECK(pf.factor.degree() >= 1);
      CHECK(factor_over_Z(pf.factor).factors.size() == 1);
      if (has_irreducible_reduction(pf.factor)) CHECK(is_irreducible(pf.factor));
    }
  }
}

TEST_CASE("factor_over_Z splits Swinnerton-Dyer style products") {
  // (x^4 - 10x^2 + 1) splits into quadratics mod every prime.
  const IntPoly sd{1, 0, -10, 0, 1};
  CHECK(is_irreducible(sd));
  const IntPoly prod = sd * IntPoly{-2, 0, 0, 1} * IntPoly{1, 0, -10, 0, 1};
  const auto z = factor_over_Z(prod);
  CHECK(z.expand() == prod);
  CHECK(z.count() == 3);
}

TEST_CASE("is_irreducible examples") {
  CHECK(is_irreducible(IntPoly{7, 0, 35, 0, 21, 0, 1}));
  CHECK_FALSE(is_irreducible(IntPoly{1, 0, 1, 0, 1, 0, 1}));
  CHECK(is_irreducible(IntPoly{1, 6, 9, 1}));
  CHECK(is_irreducible(IntPoly{-2, 1}));
  CHECK(is_irreducible(IntPoly{2, 4}));  // irreducible over Q despite content 2
}
