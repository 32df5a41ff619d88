#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tategb/errors.hpp"
#include "tategb/monomial.hpp"

using namespace tategb;

namespace {

TateMonomial tmono(unsigned val, std::initializer_list<unsigned> e) { return {val, Monomial(e)}; }

std::vector<TateMonomial> box(unsigned max_exp, unsigned max_val) {
  std::vector<TateMonomial> out;
  for (unsigned v = 0; v <= max_val; ++v)
    for (unsigned i = 0; i <= max_exp; ++i)
      for (unsigned j = 0; j <= max_exp; ++j) out.push_back(tmono(v, {i, j}));
  return out;
}

}  // namespace

TEST_CASE("monomial orders") {
  const Monomial x2{2, 0}, xy{1, 1}, x{1, 0}, y9{0, 9};
  CHECK(compare(MonomialOrder::grevlex, x2, xy) > 0);
  CHECK(compare(MonomialOrder::lex, x, y9) > 0);
  CHECK(compare(MonomialOrder::grevlex, x, y9) < 0);
  CHECK(compare(MonomialOrder::grevlex, xy, xy) == 0);
  // grevlex: x*z^0*y^2 beats x^2*z (smaller power of the last variable wins)
  CHECK(compare(MonomialOrder::grevlex, Monomial{1, 2, 0}, Monomial{2, 0, 1}) > 0);
  CHECK(compare(MonomialOrder::lex, Monomial{1, 2, 0}, Monomial{2, 0, 1}) < 0);
}

TEST_CASE("tate order puts lower valuation first") {
  const auto g = MonomialOrder::grevlex;
  CHECK(tate_compare(g, tmono(0, {1, 0}), tmono(1, {3, 0})) > 0);
  CHECK(tate_compare(g, tmono(1, {2, 0}), tmono(1, {1, 1})) > 0);
  CHECK(tate_compare(g, tmono(2, {1, 1}), tmono(2, {1, 1})) == 0);
}

TEST_CASE("tate divisibility, lcm and quotient") {
  CHECK(tate_divides(tmono(0, {1, 0}), tmono(2, {1, 1})));
  CHECK_FALSE(tate_divides(tmono(1, {0, 0}), tmono(0, {5, 5})));
  CHECK(tate_divides(tmono(3, {2, 2}), tmono(3, {2, 2})));
  CHECK(tate_lcm(tmono(1, {2, 0}), tmono(0, {1, 1})) == tmono(1, {2, 1}));
  CHECK(tate_quotient(tmono(1, {2, 1}), tmono(0, {1, 1})) == tmono(1, {1, 0}));
  CHECK(tate_lcm(tmono(2, {3, 1}), tmono(2, {3, 1})) == tmono(2, {3, 1}));
  CHECK_THROWS_AS(tate_quotient(tmono(0, {1, 1}), tmono(1, {0, 0})), DivisibilityError);
  CHECK_THROWS_AS((Monomial{1, 0} / Monomial{0, 1}), DivisibilityError);
}

TEST_CASE("property: orders are total and multiplicative") {
  std::mt19937_64 rng(7);
  for (auto order : {MonomialOrder::grevlex, MonomialOrder::lex}) {
    std::size_t failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = 1 + rng() % 4;
      const TateMonomial a = testing::random_tate_monomial(rng, n, 4, 4);
      const TateMonomial b = testing::random_tate_monomial(rng, n, 4, 4);
      const TateMonomial c = testing::random_tate_monomial(rng, n, 4, 4);
      const auto ab = tate_compare(order, a, b);
      const auto ba = tate_compare(order, b, a);
      // antisymmetry, and EQ only for identical monomials
      if ((ab > 0) != (ba < 0) || ((ab == 0) != (a == b))) ++failures;
      // transitivity
      if (ab > 0 && tate_compare(order, b, c) > 0 && !(tate_compare(order, a, c) > 0)) ++failures;
      // compatibility with multiplication, classical and Tate
      if (ab > 0 && !(tate_compare(order, c * a, c * b) > 0)) ++failures;
      const auto cm = compare(order, a.mono, b.mono);
      if (cm > 0 && !(compare(order, c.mono * a.mono, c.mono * b.mono) > 0)) ++failures;
      // 1 is the smallest classical monomial
      if (compare(order, Monomial(n), a.mono) > 0) ++failures;
      // divisibility implies order within a valuation
      if (a.mono.divides(b.mono) && compare(order, a.mono, b.mono) > 0) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("property: lcm lattice laws by brute force over a box") {
  const auto elems = box(4, 4);
  std::size_t failures = 0;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      const TateMonomial l = tate_lcm(a, b);
      if (!tate_divides(a, l) || !tate_divides(b, l)) ++failures;
      if (!(tate_lcm(b, a) == l)) ++failures;
      if (!(tate_quotient(l, a) * a == l)) ++failures;
      for (const auto& c : elems) {
        if (tate_divides(a, c) && tate_divides(b, c) && !tate_divides(l, c)) ++failures;
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("monomial hashing and equality") {
  const Monomial a{1, 2, 3};
  const Monomial b = Monomial{0, 2, 0} * Monomial{1, 0, 3};
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.degree() == 6);
  CHECK(lcm(Monomial{3, 0}, Monomial{1, 4}) == Monomial{3, 4});
}
