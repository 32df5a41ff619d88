#include "tategb/engine.hpp"

#include <algorithm>

namespace tategb {

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::buchberger:
      return "buchberger";
    case Algorithm::pote:
      return "pote";
    case Algorithm::vapote:
      return "vapote";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view s) noexcept {
  if (s == "buchberger") return Algorithm::buchberger;
  if (s == "pote") return Algorithm::pote;
  if (s == "vapote") return Algorithm::vapote;
  return std::nullopt;
}

std::optional<JPair> make_jpair(const Context& ctx, std::span<const SigPair> pairs, std::size_t i,
                                std::size_t j) {
  const TateMonomial lm1 = pairs[i].v.leading_monomial();
  const TateMonomial lm2 = pairs[j].v.leading_monomial();
  const TateMonomial t = tate_lcm(lm1, lm2);
  const TateMonomial t1 = tate_quotient(t, lm1);
  const TateMonomial t2 = tate_quotient(t, lm2);
  const TateMonomial s1 = t1 * pairs[i].sig;
  const TateMonomial s2 = t2 * pairs[j].sig;
  const auto c = ctx.compare(s1, s2);
  if (c > 0) return JPair{s1, t1, i, t};
  if (c < 0) return JPair{s2, t2, j, t};
  return std::nullopt;
}

JPair make_plain_jpair(std::span<const SigPair> pairs, std::size_t i, const TateSeries& g) {
  const TateMonomial lm = pairs[i].v.leading_monomial();
  const TateMonomial t = tate_lcm(lm, g.leading_monomial());
  const TateMonomial t1 = tate_quotient(t, lm);
  return JPair{t1 * pairs[i].sig, t1, i, t};
}

TateSeries materialize(const JPair& jp, std::span<const SigPair> pairs) {
  return pairs[jp.source].v.mul_tate_monomial(jp.multiplier);
}

bool is_covered(const Context& ctx, const TateMonomial& sig, const TateMonomial& lm,
                std::span<const SigPair> pairs) {
  for (const SigPair& pair : pairs) {
    if (!tate_divides(pair.sig, sig)) continue;
    const TateMonomial scaled = tate_quotient(sig, pair.sig) * pair.v.leading_monomial();
    if (ctx.compare(scaled, lm) < 0) return true;
  }
  return false;
}

bool sig_criterion(const TateMonomial& sig, std::span<const TateMonomial> syzygy_sigs) {
  return std::any_of(syzygy_sigs.begin(), syzygy_sigs.end(),
                     [&](const TateMonomial& s) { return tate_divides(s, sig); });
}

std::vector<TateSeries> minimize_and_reduce(std::vector<TateSeries> basis) {
  std::erase_if(basis, [](const TateSeries& g) { return g.is_zero(); });
  if (basis.empty()) return basis;
  const ContextPtr ctx = basis.front().context_ptr();

  std::vector<TateMonomial> lms;
  lms.reserve(basis.size());
  for (const TateSeries& g : basis) lms.push_back(g.leading_monomial());

  std::vector<TateSeries> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i || !tate_divides(lms[j], lms[i])) continue;
      redundant = !(lms[j] == lms[i]) || j < i;
    }
    if (!redundant) kept.push_back(unit_normalized(basis[i]));
  }

  std::vector<TateSeries> out;
  out.reserve(kept.size());
  for (const TateSeries& g : kept) {
    const Term& lt = g.leading_term();
    // g may reduce its own tail: g * (1 - c X^k) with p | c is an associate.
    TateSeries reduced = full_reduce(g.tail(), kept);
    reduced += TateSeries::monomial(ctx, lt.coeff, lt.mono);
    out.push_back(std::move(reduced));
  }
  std::sort(out.begin(), out.end(), [&](const TateSeries& a, const TateSeries& b) {
    return ctx->compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return out;
}

std::vector<ColonEntry> colon_signatures(const IncrementSnapshot& snapshot) { return snapshot.colon; }

GbResult compute_gb(Algorithm algo, std::span<const TateSeries> generators, const EngineOptions& options) {
  switch (algo) {
    case Algorithm::buchberger:
      return buchberger(generators, options);
    case Algorithm::pote:
      return pote(generators, options);
    case Algorithm::vapote:
      return vapote(generators, options);
  }
  return {};
}

GbResult reduced_gb(Algorithm algo, std::span<const TateSeries> generators, const EngineOptions& options) {
  std::vector<TateSeries> input;
  input.reserve(generators.size());
  for (const TateSeries& f : generators) {
    if (f.is_zero()) continue;
    input.push_back(f.context().ring_mode() == RingMode::rational ? normalize_to_integral(f).first : f);
  }
  GbResult result = compute_gb(algo, input, options);
  result.basis = minimize_and_reduce(std::move(result.basis));
  return result;
}

}  // namespace tategb
