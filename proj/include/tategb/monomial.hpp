#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace tategb {

/// Maximum number of variables a Context may declare.
inline constexpr std::size_t kMaxVars = 12;

enum class MonomialOrder : std::uint8_t { grevlex, lex };

/// Exponent vector X^i in N^n, stored inline.
class Monomial {
 public:
  using exponent_type = std::uint16_t;

  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n);
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial from_exponents(std::span<const unsigned> exps);

  std::size_t size() const noexcept { return size_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Returns a copy with exponent i raised by k.
  Monomial with_added(std::size_t i, unsigned k) const;

  bool divides(const Monomial& other) const noexcept;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; throws DivisibilityError unless b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.size_ == b.size_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<exponent_type, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t size_ = 0;
};

/// Compares under the given monomial order; greater means "leads".
std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept;

/// An element of N x N^n: a power of the uniformizer times X^i. This is the
/// monomial of a Tate term, i.e. a term up to a unit.
struct TateMonomial {
  unsigned val = 0;
  Monomial mono;

  friend bool operator==(const TateMonomial&, const TateMonomial&) = default;
};

/// Block order: lower valuation is greater; ties go to the monomial order.
std::strong_ordering tate_compare(MonomialOrder order, const TateMonomial& a,
                                  const TateMonomial& b) noexcept;

inline bool tate_divides(const TateMonomial& a, const TateMonomial& b) noexcept {
  return a.val <= b.val && a.mono.divides(b.mono);
}

TateMonomial operator*(const TateMonomial& a, const TateMonomial& b);
TateMonomial tate_lcm(const TateMonomial& a, const TateMonomial& b);
/// a / b; throws DivisibilityError unless b divides a.
TateMonomial tate_quotient(const TateMonomial& a, const TateMonomial& b);

/// Strict-weak "less" functor over TateMonomial for ordered containers.
struct TateLess {
  MonomialOrder order = MonomialOrder::grevlex;
  bool operator()(const TateMonomial& a, const TateMonomial& b) const noexcept {
    return tate_compare(order, a, b) < 0;
  }
};

}  // namespace tategb

template <>
struct std::hash<tategb::Monomial> {
  std::size_t operator()(const tategb::Monomial& m) const noexcept { return m.hash(); }
};
