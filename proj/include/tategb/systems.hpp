#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tategb/context.hpp"
#include "tategb/series.hpp"
#include "tategb/text.hpp"

namespace tategb {

/// q-expansions of a4 and a6 for the Tate curve y^2 + xy = x^3 + a4 x + a6
/// with parameter p*q, as series in variable `q_var` of `ctx`. Terms whose
/// coefficient vanishes mod p^N are dropped. Throws BadParameterError for
/// p in {2, 3}.
std::pair<TateSeries, TateSeries> tate_curve_coefficients(const ContextPtr& ctx, std::size_t q_var);

/// f_0, ..., f_n for the curve y^2 + xy = x^3 + a4 x + a6, where f_k is the
/// k-th division polynomial for odd k and the k-th divided by 2y + x for even
/// k, all written in variable `x_var`.
std::vector<TateSeries> division_polynomial_sequence(unsigned n, const TateSeries& a4,
                                                     const TateSeries& a6, std::size_t x_var);

/// The odd-index division polynomial psi_ell, of degree (ell^2 - 1)/2 in x.
/// Throws BadParameterError for even ell.
TateSeries division_polynomial(unsigned ell, const TateSeries& a4, const TateSeries& a6,
                               std::size_t x_var);

struct TorsionSystemSpec {
  std::uint64_t p = 5;
  unsigned ell = 3;
  unsigned prec = 3;
};

/// {psi_ell(x, q1), psi_ell(x, q2)} over variables (x, q1, q2), grevlex.
SystemFile torsion_system(const TorsionSystemSpec& spec);

struct RandomSystemSpec {
  std::uint64_t seed = 0;
  std::size_t n_gens = 2;
  std::size_t max_terms = 4;
  unsigned max_deg = 3;
  unsigned max_val = 1;
};

/// x, y, z, w for up to four variables, otherwise x1, ..., xn.
std::vector<std::string> default_var_names(std::size_t n);

/// Deterministic in the seed. Every generator is nonzero with at most
/// max_terms terms, exponents at most max_deg and coefficient valuations at
/// most max_val. Throws BadParameterError when max_val >= prec or a bound is 0.
std::vector<TateSeries> random_system(const RandomSystemSpec& spec, const ContextPtr& ctx);

}  // namespace tategb
