#include <map>

#include "tategb/engine.hpp"

namespace tategb {
namespace {

enum class Variant { pote, vapote };

struct IncrementResult {
  std::vector<TateSeries> added;
  /// VaPoTe: nonzero results whose valuation rose.
  std::vector<TateSeries> diverted;
};

class Increment {
 public:
  Increment(Variant variant, const EngineOptions& options, EngineStats& stats, const TateSeries& f,
            const std::vector<TateSeries>& basis)
      : variant_(variant),
        options_(options),
        stats_(stats),
        ctx_(f.context_ptr()),
        basis_(basis),
        f_(f),
        f_val_(f.valuation()),
        queue_(TateLess{ctx_->order()}) {}

  IncrementResult run(const IncrementObserver& observer) {
    const Monomial one = ctx_->one_monomial();
    const unsigned n = ctx_->prec();
    std::optional<TateSeries> u;
    if (options_.debug_track_syzygies) u = TateSeries::constant(ctx_, ctx_->coeffs().one());
    pairs_.push_back({TateMonomial{0, one}, f_, u});

    const bool monic = options_.monic_signatures && variant_ == Variant::vapote;
    for (const TateSeries& g : basis_) {
      const TateMonomial lm = g.leading_monomial();
      syzygies_.push_back(monic ? TateMonomial{0, lm.mono} : lm);
    }
    syzygies_.push_back({n, one});
    add_precision_syzygy(0);
    for (const TateSeries& g : basis_) insert(make_plain_jpair(pairs_, 0, g));

    while (!queue_.empty()) {
      const JPair jp = queue_.begin()->second;
      queue_.erase(queue_.begin());
      ++stats_.jpairs_popped;
      if (is_covered(*ctx_, jp.sig, jp.lm, pairs_)) {
        ++stats_.skipped_cover;
        continue;
      }
      if (sig_criterion(jp.sig, syzygies_)) {
        ++stats_.skipped_sig;
        continue;
      }
      process(jp);
    }

    if (observer) {
      observer(IncrementSnapshot{f_, basis_, pairs_, syzygies_, colon_, diverted_sigs_});
    }
    IncrementResult out;
    out.diverted = std::move(diverted_);
    for (SigPair& pair : pairs_) out.added.push_back(std::move(pair.v));
    return out;
  }

 private:
  void process(const JPair& jp) {
    ++stats_.reductions;
    const SigPair& src = pairs_[jp.source];
    std::optional<TateSeries> u;
    if (src.u) u = src.u->mul_tate_monomial(jp.multiplier);
    const bool interrupt = options_.interrupt_on_valuation_rise && variant_ == Variant::vapote;
    ReductionOutcome out = regular_reduce(*ctx_, jp.sig, materialize(jp, pairs_), pairs_, basis_,
                                          interrupt, u ? &*u : nullptr);
    stats_.reduction_steps += out.steps;
    if (out.interrupted) ++stats_.interrupted_reductions;

    TateSeries& v = out.result;
    if (v.is_zero()) {
      ++stats_.zero_reductions;
      syzygies_.push_back(jp.sig);
      colon_.push_back({jp.sig, std::move(u)});
      return;
    }
    if (variant_ == Variant::vapote && v.valuation() > f_val_) {
      ++stats_.diverted;
      syzygies_.push_back(jp.sig);
      diverted_sigs_.push_back(jp.sig);
      diverted_.push_back(std::move(v));
      return;
    }

    const std::size_t k = pairs_.size();
    pairs_.push_back({jp.sig, std::move(v), std::move(u)});
    add_precision_syzygy(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (auto j = make_jpair(*ctx_, pairs_, k, i)) insert(*j);
    }
    for (const TateSeries& g : basis_) insert(make_plain_jpair(pairs_, k, g));
  }

  // p^(N - val v) * v vanishes, so sig * p^(N - val v) is a syzygy signature.
  void add_precision_syzygy(std::size_t k) {
    const SigPair& pair = pairs_[k];
    syzygies_.push_back({ctx_->prec() - pair.v.valuation() + pair.sig.val, pair.sig.mono});
  }

  // One J-pair per signature; the smaller leading monomial is kept.
  void insert(const JPair& jp) {
    ++stats_.jpairs_created;
    auto [it, fresh] = queue_.try_emplace(jp.sig, jp);
    if (!fresh && ctx_->compare(jp.lm, it->second.lm) < 0) it->second = jp;
  }

  Variant variant_;
  const EngineOptions& options_;
  EngineStats& stats_;
  ContextPtr ctx_;
  const std::vector<TateSeries>& basis_;
  TateSeries f_;
  unsigned f_val_;

  std::vector<SigPair> pairs_;
  std::vector<TateMonomial> syzygies_;
  std::vector<ColonEntry> colon_;
  std::vector<TateMonomial> diverted_sigs_;
  std::vector<TateSeries> diverted_;
  std::map<TateMonomial, JPair, TateLess> queue_;
};

void merge_increment(std::vector<TateSeries>& basis, std::vector<TateSeries> added, bool interreduce) {
  for (TateSeries& g : added) basis.push_back(std::move(g));
  if (interreduce) basis = minimize_and_reduce(std::move(basis));
}

void report_trivial(const IncrementObserver& observer, const TateSeries& f,
                    const std::vector<TateSeries>& basis, const EngineOptions& options) {
  if (!observer) return;
  const ContextPtr& ctx = f.context_ptr();
  std::optional<TateSeries> u;
  if (options.debug_track_syzygies) u = TateSeries::constant(ctx, ctx->coeffs().one());
  const TateMonomial unit{0, ctx->one_monomial()};
  observer(IncrementSnapshot{f, basis, {}, {unit}, {{unit, std::move(u)}}, {}});
}

}  // namespace

GbResult pote(std::span<const TateSeries> generators, const EngineOptions& options,
              const IncrementObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  GbResult result;
  for (const TateSeries& input : generators) {
    if (input.is_zero()) continue;
    ++result.stats.increments;
    TateSeries f = options.interreduce ? full_reduce(input, result.basis) : input;
    if (f.is_zero()) {
      report_trivial(observer, input, result.basis, options);
      continue;
    }
    Increment inc(Variant::pote, options, result.stats, f, result.basis);
    merge_increment(result.basis, inc.run(observer).added, options.interreduce);
  }
  result.stats.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

GbResult vapote(std::span<const TateSeries> generators, const EngineOptions& options,
                const IncrementObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  GbResult result;
  // Keyed by valuation; equal keys pop in insertion order.
  std::multimap<unsigned, TateSeries> queue;
  for (const TateSeries& f : generators) {
    if (!f.is_zero()) queue.emplace(f.valuation(), f);
  }
  while (!queue.empty()) {
    TateSeries f = std::move(queue.begin()->second);
    queue.erase(queue.begin());
    if (options.interreduce) {
      const unsigned val = f.valuation();
      ReductionOutcome out = top_reduce(f, result.basis, options.interrupt_on_valuation_rise);
      result.stats.reduction_steps += out.steps;
      if (out.result.is_zero()) {
        ++result.stats.increments;
        report_trivial(observer, f, result.basis, options);
        continue;
      }
      if (out.result.valuation() > val) {
        if (out.interrupted) ++result.stats.interrupted_reductions;
        ++result.stats.diverted;
        queue.emplace(out.result.valuation(), std::move(out.result));
        continue;
      }
      f = full_reduce(std::move(out.result), result.basis);
    }
    ++result.stats.increments;
    Increment inc(Variant::vapote, options, result.stats, f, result.basis);
    IncrementResult out = inc.run(observer);
    for (TateSeries& d : out.diverted) {
      const unsigned val = d.valuation();
      queue.emplace(val, std::move(d));
    }
    merge_increment(result.basis, std::move(out.added), options.interreduce);
  }
  result.stats.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace tategb
