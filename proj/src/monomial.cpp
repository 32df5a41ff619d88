#include "tategb/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tategb/errors.hpp"

namespace tategb {
namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<Monomial::exponent_type>::max();

void check_size(std::size_t n) {
  if (n > kMaxVars) {
    throw ContextError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

}  // namespace

Monomial::Monomial(std::size_t n) : size_(static_cast<std::uint8_t>(n)) { check_size(n); }

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  check_size(exps.size());
  size_ = static_cast<std::uint8_t>(exps.size());
  std::size_t i = 0;
  for (unsigned e : exps) {
    if (e > kMaxExponent) throw Error("exponent overflow");
    exps_[i++] = static_cast<exponent_type>(e);
    degree_ += e;
  }
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  check_size(exps.size());
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > kMaxExponent) throw Error("exponent overflow");
    m.exps_[i] = static_cast<exponent_type>(exps[i]);
    m.degree_ += exps[i];
  }
  return m;
}

Monomial Monomial::with_added(std::size_t i, unsigned k) const {
  Monomial m = *this;
  if (m.exps_[i] + k > kMaxExponent) throw Error("exponent overflow");
  m.exps_[i] = static_cast<exponent_type>(m.exps_[i] + k);
  m.degree_ += k;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < a.size_; ++i) {
    const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > kMaxExponent) throw Error("exponent overflow");
    m.exps_[i] = static_cast<Monomial::exponent_type>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw DivisibilityError("monomial quotient: divisor does not divide");
  Monomial m = a;
  for (std::size_t i = 0; i < a.size_; ++i) {
    m.exps_[i] = static_cast<Monomial::exponent_type>(a.exps_[i] - b.exps_[i]);
  }
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.degree_ = 0;
  for (std::size_t i = 0; i < a.size_; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= exps_[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept {
  if (order == MonomialOrder::grevlex) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    // Equal degree: the monomial with the smaller exponent in the last
    // differing variable is greater.
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering tate_compare(MonomialOrder order, const TateMonomial& a,
                                  const TateMonomial& b) noexcept {
  if (a.val != b.val) return b.val <=> a.val;
  return compare(order, a.mono, b.mono);
}

TateMonomial operator*(const TateMonomial& a, const TateMonomial& b) {
  return {a.val + b.val, a.mono * b.mono};
}

TateMonomial tate_lcm(const TateMonomial& a, const TateMonomial& b) {
  return {std::max(a.val, b.val), lcm(a.mono, b.mono)};
}

TateMonomial tate_quotient(const TateMonomial& a, const TateMonomial& b) {
  if (!tate_divides(b, a)) throw DivisibilityError("Tate monomial quotient: divisor does not divide");
  return {a.val - b.val, a.mono / b.mono};
}

}  // namespace tategb
