#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tategb/errors.hpp"
#include "tategb/padic.hpp"

using namespace tategb;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Shift-and-add multiplication, independent of the 128-bit product path.
std::uint64_t slow_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t acc = 0;
  a %= m;
  while (b != 0) {
    if (b & 1) acc = (acc >= m - a) ? acc - (m - a) : acc + a;
    a = (a >= m - a) ? a - (m - a) : a + a;
    b >>= 1;
  }
  return acc;
}

}  // namespace

TEST_CASE("from_integer reduces into [0, p^N)") {
  const PadicRing zp(5, 2);
  CHECK(zp.from_integer(26).residue == 1);
  CHECK(zp.from_integer(0).residue == 0);
  CHECK(zp.valuation(zp.from_integer(0)) == 2);
  CHECK(zp.from_integer(-1).residue == 24);
  CHECK(zp.from_integer(-50).residue == 0);
}

TEST_CASE("valuation") {
  const PadicRing zp(5, 3);
  CHECK(zp.valuation(Coeff{50}) == 2);
  CHECK(zp.valuation(Coeff{0}) == 3);
  CHECK(zp.valuation(Coeff{3}) == 0);
}

TEST_CASE("ring operations") {
  const PadicRing zp(5, 2);
  CHECK(zp.mul(Coeff{5}, Coeff{5}).residue == 0);
  CHECK(zp.add(Coeff{24}, Coeff{1}).residue == 0);
  CHECK(zp.mul(Coeff{17}, zp.one()) == Coeff{17});
  CHECK(zp.neg(Coeff{0}) == Coeff{0});
  CHECK(zp.sub(Coeff{3}, Coeff{4}).residue == 24);
}

TEST_CASE("divide_exact") {
  const PadicRing zp(5, 3);
  const Coeff q = zp.divide_exact(Coeff{50}, Coeff{10});
  CHECK(zp.mul(q, Coeff{10}) == Coeff{50});
  CHECK(zp.valuation(q) == 1);
  CHECK(q.residue == 5);
  CHECK(zp.divide_exact(Coeff{77}, zp.one()) == Coeff{77});
  CHECK(PadicRing(5, 2).divide_exact(Coeff{0}, Coeff{5}) == Coeff{0});
  CHECK_THROWS_AS(zp.divide_exact(Coeff{5}, Coeff{25}), ValuationError);
  CHECK_THROWS_AS(zp.divide_exact(Coeff{5}, Coeff{0}), ZeroDivisorError);
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(PadicRing(6, 2), ContextError);
  CHECK_THROWS_AS(PadicRing(1, 2), ContextError);
  CHECK_THROWS_AS(PadicRing(5, 0), ContextError);
  CHECK_NOTHROW(PadicRing(2, 62));
  CHECK_THROWS_AS(PadicRing(2, 63), ContextError);
  CHECK_THROWS_AS(PadicRing(11, 19), ContextError);
}

TEST_CASE("from_decimal handles digit strings longer than 64 bits") {
  const PadicRing zp(7, 5);
  // 10^30 mod 7^5 computed by repeated multiplication.
  std::uint64_t expected = 1;
  for (int i = 0; i < 30; ++i) expected = expected * 10 % 16807;
  CHECK(zp.from_decimal("1000000000000000000000000000000", false).residue == expected);
  CHECK(zp.from_decimal("1", true).residue == 16806);
}

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
  CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("property: ring axioms and valuation laws on random triples") {
  std::mt19937_64 rng(1);
  const std::pair<std::uint64_t, unsigned> rings[] = {{2, 62}, {3, 39}, {5, 7}, {11, 3}, {2305843009213693951ULL, 1}};
  for (const auto& [p, n] : rings) {
    const PadicRing zp(p, n);
    for (int i = 0; i < 1000; ++i) {
      const Coeff a = testing::random_coeff(rng, zp);
      const Coeff b = testing::random_coeff(rng, zp);
      const Coeff c = testing::random_coeff(rng, zp);
      REQUIRE(a.residue < zp.modulus());
      CHECK(zp.add(a, b) == zp.add(b, a));
      CHECK(zp.mul(a, b) == zp.mul(b, a));
      CHECK(zp.add(zp.add(a, b), c) == zp.add(a, zp.add(b, c)));
      CHECK(zp.mul(zp.mul(a, b), c) == zp.mul(a, zp.mul(b, c)));
      CHECK(zp.mul(a, zp.add(b, c)) == zp.add(zp.mul(a, b), zp.mul(a, c)));
      CHECK(zp.add(a, zp.neg(a)) == Coeff{0});
      CHECK(zp.mul(a, b).residue == slow_mulmod(a.residue, b.residue, zp.modulus()));
      CHECK(zp.valuation(zp.mul(a, b)) == std::min(zp.valuation(a) + zp.valuation(b), n));
      CHECK(zp.valuation(zp.add(a, b)) >= std::min(zp.valuation(a), zp.valuation(b)));
      if (!zp.is_zero(b) && zp.valuation(b) <= zp.valuation(zp.mul(a, b))) {
        const Coeff ab = zp.mul(a, b);
        const Coeff q = zp.divide_exact(ab, b);
        CHECK(zp.mul(q, b) == ab);
        if (!zp.is_zero(ab)) CHECK(zp.valuation(q) == zp.valuation(ab) - zp.valuation(b));
      }
      if (!zp.is_zero(a)) {
        const Coeff u = zp.unit_part(a);
        CHECK(zp.valuation(u) == 0);
        CHECK(zp.mul(zp.inverse_unit(u), u) == zp.one());
        CHECK(zp.mul(u, zp.power_coeff(zp.valuation(a))) == a);
      }
      const unsigned k = static_cast<unsigned>(rng() % (n + 1));
      const Coeff r = zp.reduce_below(a, k);
      CHECK(r.residue < zp.power(k));
      CHECK(zp.valuation(zp.sub(a, r)) >= k);
    }
  }
}
