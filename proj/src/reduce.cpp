#include "tategb/reduce.hpp"

#include <unordered_map>
#include <vector>

namespace tategb {

ReductionOutcome top_reduce(TateSeries f, std::span<const TateSeries> reducers,
                            bool stop_on_valuation_rise) {
  ReductionOutcome out{std::move(f)};
  TateSeries& cur = out.result;
  const PadicRing& zp = cur.context().coeffs();
  const unsigned start_val = cur.valuation();
  while (!cur.is_zero()) {
    if (stop_on_valuation_rise && cur.valuation() > start_val) {
      out.interrupted = true;
      break;
    }
    const Term lt = cur.leading_term();
    const TateMonomial lm = lt.tate_monomial();
    const TateSeries* reducer = nullptr;
    for (const TateSeries& g : reducers) {
      if (!g.is_zero() && tate_divides(g.leading_monomial(), lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) break;
    const Term& glt = reducer->leading_term();
    cur.sub_mul_term(zp.divide_exact(lt.coeff, glt.coeff), lt.mono / glt.mono, *reducer);
    ++out.steps;
  }
  return out;
}

TateSeries full_reduce(TateSeries work, std::span<const TateSeries> reducers) {
  const ContextPtr ctx = work.context_ptr();
  const PadicRing& zp = ctx->coeffs();
  std::vector<std::pair<Monomial, Coeff>> done;
  std::unordered_map<Monomial, std::size_t> done_at;
  while (!work.is_zero()) {
    const Term lt = work.leading_term();
    work.erase(lt.mono);
    // A reduction can land a higher-valuation term on an exponent that is
    // already finished; fold it in and canonicalize again.
    Coeff c = lt.coeff;
    const auto seen = done_at.find(lt.mono);
    if (seen != done_at.end()) c = zp.add(c, done[seen->second].second);

    const TateSeries* best = nullptr;
    unsigned mu = 0;
    for (const TateSeries& g : reducers) {
      if (g.is_zero()) continue;
      const Term& glt = g.leading_term();
      if (glt.mono.divides(lt.mono) && (best == nullptr || glt.val < mu)) {
        best = &g;
        mu = glt.val;
      }
    }
    Coeff keep = c;
    if (best != nullptr) {
      // Bring the coefficient into [0, p^mu). The correction has valuation
      // >= mu, so its other terms land strictly below this one.
      keep = zp.reduce_below(c, mu);
      if (keep != c) {
        const Term& blt = best->leading_term();
        work.sub_mul_term(zp.divide_exact(zp.sub(c, keep), blt.coeff), lt.mono / blt.mono, *best);
        work.erase(lt.mono);
      }
    }
    if (seen != done_at.end()) {
      done[seen->second].second = keep;
    } else {
      done_at.emplace(lt.mono, done.size());
      done.emplace_back(lt.mono, keep);
    }
  }
  return TateSeries::from_terms(ctx, std::move(done));
}

TateSeries s_series(const TateSeries& f, const TateSeries& g) {
  const PadicRing& zp = f.context().coeffs();
  const Term& a = f.leading_term();
  const Term& b = g.leading_term();
  const TateMonomial lcm = tate_lcm(a.tate_monomial(), b.tate_monomial());
  const Coeff target = zp.power_coeff(lcm.val);
  TateSeries s = f.mul_term(zp.divide_exact(target, a.coeff), lcm.mono / a.mono);
  s.sub_mul_term(zp.divide_exact(target, b.coeff), lcm.mono / b.mono, g);
  return s;
}

ReductionOutcome regular_reduce(const Context& ctx, const TateMonomial& sig, TateSeries v,
                                std::span<const SigPair> pairs, std::span<const TateSeries> plain,
                                bool interrupt, TateSeries* u) {
  ReductionOutcome out{std::move(v)};
  TateSeries& cur = out.result;
  const PadicRing& zp = ctx.coeffs();
  const unsigned start_val = cur.valuation();
  while (!cur.is_zero()) {
    if (interrupt && cur.valuation() > start_val) {
      out.interrupted = true;
      break;
    }
    const Term lt = cur.leading_term();
    const TateMonomial lm = lt.tate_monomial();

    const TateSeries* reducer = nullptr;
    const SigPair* reducer_pair = nullptr;
    for (const TateSeries& g : plain) {
      if (!g.is_zero() && tate_divides(g.leading_monomial(), lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      std::optional<TateMonomial> best_sig;
      for (const SigPair& pair : pairs) {
        const TateMonomial plm = pair.v.leading_monomial();
        if (!tate_divides(plm, lm)) continue;
        const TateMonomial scaled = tate_quotient(lm, plm) * pair.sig;
        if (ctx.compare(scaled, sig) >= 0) continue;
        if (!best_sig || ctx.compare(scaled, *best_sig) < 0) {
          best_sig = scaled;
          reducer_pair = &pair;
        }
      }
      if (reducer_pair == nullptr) break;
      reducer = &reducer_pair->v;
    }

    const Term& glt = reducer->leading_term();
    const Coeff q = zp.divide_exact(lt.coeff, glt.coeff);
    const Monomial shift = lt.mono / glt.mono;
    cur.sub_mul_term(q, shift, *reducer);
    if (u != nullptr && reducer_pair != nullptr && reducer_pair->u) {
      u->sub_mul_term(q, shift, *reducer_pair->u);
    }
    ++out.steps;
  }
  return out;
}

}  // namespace tategb
