// Random generators and small helpers shared by the unit and acceptance tests.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tategb/context.hpp"
#include "tategb/engine.hpp"
#include "tategb/series.hpp"
#include "tategb/systems.hpp"
#include "tategb/text.hpp"

namespace tategb::testing {

inline const std::vector<std::string>& var_names(std::size_t n) {
  static const std::vector<std::vector<std::string>> names = {
      {}, {"x"}, {"x", "y"}, {"x", "y", "z"}, {"x", "y", "z", "w"}};
  return names.at(n);
}

inline ContextPtr make_ctx(std::uint64_t p, unsigned prec, std::size_t n_vars,
                           MonomialOrder order = MonomialOrder::grevlex) {
  return Context::create(p, prec, var_names(n_vars), order);
}

inline Coeff random_coeff(std::mt19937_64& rng, const PadicRing& zp) {
  // Mix in small residues and exact prime powers so valuations spread out.
  switch (rng() % 4) {
    case 0:
      return zp.power_coeff(static_cast<unsigned>(rng() % (zp.precision() + 1)));
    case 1:
      return zp.mul(zp.power_coeff(static_cast<unsigned>(rng() % zp.precision())),
                    Coeff{rng() % zp.modulus()});
    default:
      return Coeff{rng() % zp.modulus()};
  }
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m = m.with_added(i, static_cast<unsigned>(rng() % (max_exp + 1)));
  return m;
}

inline TateMonomial random_tate_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_exp,
                                         unsigned max_val) {
  return {static_cast<unsigned>(rng() % (max_val + 1)), random_monomial(rng, n, max_exp)};
}

inline TateSeries random_series(std::mt19937_64& rng, const ContextPtr& ctx, std::size_t max_terms,
                                unsigned max_exp) {
  std::vector<std::pair<Monomial, Coeff>> terms;
  const std::size_t count = rng() % (max_terms + 1);
  for (std::size_t i = 0; i < count; ++i) {
    terms.emplace_back(random_monomial(rng, ctx->num_vars(), max_exp), random_coeff(rng, ctx->coeffs()));
  }
  return TateSeries::from_terms(ctx, std::move(terms));
}

/// One point of the acceptance grid: p in {2,3,5,11}, 2 or 3 variables,
/// prec in 3..8, at most 3 generators with at most 5 terms.
struct GridCase {
  ContextPtr ctx;
  std::vector<TateSeries> generators;
};

inline GridCase grid_case(std::uint64_t seed) {
  static constexpr std::uint64_t primes[] = {2, 3, 5, 11};
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  const std::uint64_t p = primes[rng() % 4];
  const unsigned prec = 3 + static_cast<unsigned>(rng() % 6);
  const std::size_t n = 2 + rng() % 2;
  GridCase out{make_ctx(p, prec, n), {}};
  RandomSystemSpec spec;
  spec.seed = rng();
  spec.n_gens = 1 + rng() % 3;
  spec.max_terms = 5;
  spec.max_deg = 3;
  spec.max_val = std::min(2u, prec - 1);
  out.generators = random_system(spec, out.ctx);
  return out;
}

inline std::string describe(const std::vector<TateSeries>& fs) {
  std::string out;
  for (const TateSeries& f : fs) out += "  " + to_string(f) + "\n";
  return out;
}

}  // namespace tategb::testing
