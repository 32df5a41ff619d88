#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tategb/monomial.hpp"
#include "tategb/padic.hpp"

namespace tategb {

/// Whether the ideal lives in the integral algebra or its localization.
enum class RingMode : std::uint8_t { integral, rational };

std::string_view to_string(MonomialOrder order) noexcept;
std::string_view to_string(RingMode mode) noexcept;
std::optional<MonomialOrder> parse_order(std::string_view s) noexcept;
std::optional<RingMode> parse_ring_mode(std::string_view s) noexcept;

/// Global parameters of a computation in K°{X} / p^N with K = Q_p.
///
/// Immutable once built; series hold a shared pointer to their context.
class Context {
 public:
  /// Throws ContextError on composite p, N = 0, p^N > 2^62, an empty or
  /// too long variable list, or duplicate/invalid variable names.
  Context(std::uint64_t p, unsigned precision, std::vector<std::string> var_names,
          MonomialOrder order = MonomialOrder::grevlex, RingMode mode = RingMode::integral);

  static std::shared_ptr<const Context> create(std::uint64_t p, unsigned precision,
                                               std::vector<std::string> var_names,
                                               MonomialOrder order = MonomialOrder::grevlex,
                                               RingMode mode = RingMode::integral);

  const PadicRing& coeffs() const noexcept { return ring_; }
  std::uint64_t p() const noexcept { return ring_.prime(); }
  unsigned prec() const noexcept { return ring_.precision(); }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& var_names() const noexcept { return vars_; }
  std::optional<std::size_t> var_index(std::string_view name) const noexcept;
  MonomialOrder order() const noexcept { return order_; }
  RingMode ring_mode() const noexcept { return mode_; }

  Monomial one_monomial() const { return Monomial(vars_.size()); }
  Monomial variable(std::size_t i, unsigned exp = 1) const { return one_monomial().with_added(i, exp); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    return tategb::compare(order_, a, b);
  }
  std::strong_ordering compare(const TateMonomial& a, const TateMonomial& b) const noexcept {
    return tate_compare(order_, a, b);
  }

  /// Same ring: p, N, variables and order. Ring mode is not part of the ring.
  friend bool operator==(const Context& a, const Context& b) noexcept {
    return a.p() == b.p() && a.prec() == b.prec() && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  PadicRing ring_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  RingMode mode_;
};

using ContextPtr = std::shared_ptr<const Context>;

}  // namespace tategb
