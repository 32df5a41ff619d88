#include <queue>

#include "tategb/engine.hpp"

namespace tategb {
namespace {

struct CriticalPair {
  TateMonomial lcm;
  std::size_t i;
  std::size_t j;
  std::size_t seq;
};

}  // namespace

GbResult buchberger(std::span<const TateSeries> generators, const EngineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  GbResult result;
  EngineStats& stats = result.stats;
  std::vector<TateSeries>& basis = result.basis;
  for (const TateSeries& f : generators) {
    if (!f.is_zero()) basis.push_back(f);
  }
  if (basis.empty()) return result;
  const ContextPtr ctx = basis.front().context_ptr();

  // Normal strategy: smallest lcm exponent first, lower valuation on ties.
  auto later = [&ctx](const CriticalPair& a, const CriticalPair& b) {
    const auto c = ctx->compare(a.lcm.mono, b.lcm.mono);
    if (c != 0) return c > 0;
    if (a.lcm.val != b.lcm.val) return a.lcm.val > b.lcm.val;
    return a.seq > b.seq;
  };
  std::priority_queue<CriticalPair, std::vector<CriticalPair>, decltype(later)> queue(later);
  std::size_t seq = 0;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      queue.push({tate_lcm(basis[i].leading_monomial(), basis[k].leading_monomial()), i, k, seq++});
      ++stats.jpairs_created;
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs(k);

  while (!queue.empty()) {
    const CriticalPair cp = queue.top();
    queue.pop();
    ++stats.jpairs_popped;
    ++stats.reductions;
    ReductionOutcome out = top_reduce(s_series(basis[cp.i], basis[cp.j]), basis);
    stats.reduction_steps += out.steps;
    if (out.result.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    basis.push_back(std::move(out.result));
    add_pairs(basis.size() - 1);
  }
  if (options.interreduce) basis = minimize_and_reduce(std::move(basis));
  stats.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace tategb
