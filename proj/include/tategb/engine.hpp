#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tategb/monomial.hpp"
#include "tategb/reduce.hpp"
#include "tategb/series.hpp"

namespace tategb {

enum class Algorithm { buchberger, pote, vapote };

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view s) noexcept;

struct EngineOptions {
  /// VaPoTe only: stop regular reductions (and the reduction of popped
  /// inputs) as soon as the valuation rises.
  bool interrupt_on_valuation_rise = false;
  /// Seed the syzygy signatures of the previous basis with their valuation
  /// dropped. Applied by VaPoTe, where every seeded basis element has
  /// valuation at most that of the current input.
  bool monic_signatures = true;
  /// Carry the full multiplier u of every pair.
  bool debug_track_syzygies = false;
  /// Reduce each new input against the basis and minimize/reduce the basis
  /// after each increment.
  bool interreduce = true;
};

struct EngineStats {
  std::size_t jpairs_created = 0;
  std::size_t jpairs_popped = 0;
  std::size_t skipped_cover = 0;
  std::size_t skipped_sig = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
  std::size_t interrupted_reductions = 0;
  /// VaPoTe: nonzero results sent back to the queue.
  std::size_t diverted = 0;
  /// Individual top-reduction steps across all reductions.
  std::size_t reduction_steps = 0;
  std::size_t increments = 0;
  std::chrono::nanoseconds wall_time{0};
};

struct GbResult {
  std::vector<TateSeries> basis;
  EngineStats stats;
};

/// A J-pair t * p_source, kept lazily as (multiplier, index into G).
struct JPair {
  TateMonomial sig;
  TateMonomial multiplier;
  std::size_t source = 0;
  /// Leading monomial of t * v_source (the lcm of the two leading monomials).
  TateMonomial lm;
};

/// J-pair of G[i] and G[j]; nullopt when the scaled signatures tie.
std::optional<JPair> make_jpair(const Context& ctx, std::span<const SigPair> pairs, std::size_t i,
                                std::size_t j);
/// J-pair of G[i] with a basis element g (signature zero); always defined.
JPair make_plain_jpair(std::span<const SigPair> pairs, std::size_t i, const TateSeries& g);
/// v of the J-pair, i.e. p^t.val * X^t.mono * v_source.
TateSeries materialize(const JPair& jp, std::span<const SigPair> pairs);

/// Some (s_i, v_i) has s_i | sig and (sig / s_i) * LM(v_i) < lm.
bool is_covered(const Context& ctx, const TateMonomial& sig, const TateMonomial& lm,
                std::span<const SigPair> pairs);
/// Some s in S divides sig.
bool sig_criterion(const TateMonomial& sig, std::span<const TateMonomial> syzygy_sigs);

/// Keeps one element per minimal leading monomial (the earliest), makes each
/// leading coefficient an exact power of p and reduces every tail. The result
/// is sorted by leading monomial, largest first, and is the unique reduced
/// Gröbner basis when the input is a Gröbner basis.
std::vector<TateSeries> minimize_and_reduce(std::vector<TateSeries> basis);

/// A signature whose pair reduced to zero during an increment.
struct ColonEntry {
  TateMonomial sig;
  std::optional<TateSeries> u;
};

/// State at the end of one increment of the signature engines, before the
/// basis is updated.
struct IncrementSnapshot {
  TateSeries f;
  std::vector<TateSeries> previous_basis;
  std::vector<SigPair> pairs;
  /// Every syzygy signature in force at the end: seeds, precision syzygies,
  /// zero reductions and (VaPoTe) diverted pairs.
  std::vector<TateMonomial> syzygy_sigs;
  /// Zero reductions only, in discovery order.
  std::vector<ColonEntry> colon;
  /// VaPoTe: signatures whose reduction raised the valuation.
  std::vector<TateMonomial> diverted_sigs;
};

using IncrementObserver = std::function<void(const IncrementSnapshot&)>;

/// Signatures u with u*f in the previous ideal found during the increment;
/// the seeded LM(g) entries and precision syzygies are excluded.
std::vector<ColonEntry> colon_signatures(const IncrementSnapshot& snapshot);

GbResult buchberger(std::span<const TateSeries> generators, const EngineOptions& options = {});
GbResult pote(std::span<const TateSeries> generators, const EngineOptions& options = {},
              const IncrementObserver& observer = {});
GbResult vapote(std::span<const TateSeries> generators, const EngineOptions& options = {},
                const IncrementObserver& observer = {});
GbResult compute_gb(Algorithm algo, std::span<const TateSeries> generators,
                    const EngineOptions& options = {});

/// Runs `algo` after applying the ring mode of the generators' context and
/// returns the minimized reduced basis.
GbResult reduced_gb(Algorithm algo, std::span<const TateSeries> generators,
                    const EngineOptions& options = {});

}  // namespace tategb
