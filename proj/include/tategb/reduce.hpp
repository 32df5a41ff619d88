#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "tategb/monomial.hpp"
#include "tategb/series.hpp"

namespace tategb {

struct ReductionOutcome {
  TateSeries result;
  std::size_t steps = 0;
  /// The valuation rose and the reduction was stopped early.
  bool interrupted = false;
};

/// Leading-term reduction: while some reducer's leading monomial divides the
/// leading monomial of the current series, cancel that leading term. The
/// first qualifying reducer in list order is used.
///
/// With `stop_on_valuation_rise`, returns as soon as the Gauss valuation of
/// the current series exceeds that of `f`.
ReductionOutcome top_reduce(TateSeries f, std::span<const TateSeries> reducers,
                            bool stop_on_valuation_rise = false);

/// Reduces every term, not just the leading one.
///
/// On return no term c*X^i of the result has its Tate monomial divisible by
/// a reducer's leading monomial, and c lies in [0, p^mu) where mu is the
/// smallest leading valuation among reducers whose leading exponent divides
/// X^i. With reducers forming a Gröbner basis this is a canonical normal form.
TateSeries full_reduce(TateSeries f, std::span<const TateSeries> reducers);

/// S-series of f and g: both leading terms lifted to the lcm of their Tate
/// monomials with coefficient exactly p^val, then subtracted.
TateSeries s_series(const TateSeries& f, const TateSeries& g);

/// A member of the signature module stored as (LM(u), v).
///
/// `u` is populated only when syzygy tracking is on; it is the full
/// multiplier with u*f - v in the ideal of the previous basis.
struct SigPair {
  TateMonomial sig;
  TateSeries v;
  std::optional<TateSeries> u;
};

/// Signature-safe top reduction of the pair (sig, v).
///
/// A reducer qualifies when its leading monomial divides LM(current) and the
/// scaled signature t*sig_g is strictly below `sig` (regular). Plain reducers
/// carry the zero signature and always qualify. Among qualifying reducers the
/// one with the smallest scaled signature wins, plain reducers first, ties
/// broken by list position. Super reductions are never performed.
///
/// With `interrupt`, stops once the Gauss valuation exceeds that of `v`; the
/// step that raised it is kept. When `u` is non-null it is updated alongside v.
ReductionOutcome regular_reduce(const Context& ctx, const TateMonomial& sig, TateSeries v,
                                std::span<const SigPair> pairs, std::span<const TateSeries> plain,
                                bool interrupt, TateSeries* u = nullptr);

}  // namespace tategb
