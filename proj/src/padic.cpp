#include "tategb/padic.hpp"

#include <string>

#include "tategb/errors.hpp"

namespace tategb {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a modulo m, gcd(a, m) = 1 assumed; m < 2^63.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m) noexcept {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  std::int64_t inv = old_s % static_cast<std::int64_t>(m);
  if (inv < 0) inv += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(inv);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PadicRing::PadicRing(std::uint64_t p, unsigned precision) : p_(p), prec_(precision) {
  if (!is_prime(p)) throw ContextError("p = " + std::to_string(p) + " is not prime");
  if (precision == 0) throw ContextError("precision must be at least 1");
  powers_.reserve(precision + 1);
  powers_.push_back(1);
  for (unsigned k = 1; k <= precision; ++k) {
    const std::uint64_t prev = powers_.back();
    if (prev > kMaxModulus / p) {
      throw ContextError("p^N = " + std::to_string(p) + "^" + std::to_string(precision) +
                         " exceeds the supported modulus 2^62");
    }
    powers_.push_back(prev * p);
  }
}

Coeff PadicRing::from_integer(std::int64_t z) const noexcept {
  const auto m = static_cast<std::int64_t>(modulus());
  std::int64_t r = z % m;
  if (r < 0) r += m;
  return Coeff{static_cast<std::uint64_t>(r)};
}

Coeff PadicRing::from_decimal(std::string_view digits, bool negative) const {
  const std::uint64_t m = modulus();
  std::uint64_t r = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw Error("invalid decimal digit in '" + std::string(digits) + "'");
    r = static_cast<std::uint64_t>((static_cast<u128>(r) * 10 + static_cast<unsigned>(ch - '0')) % m);
  }
  Coeff c{r};
  return negative ? neg(c) : c;
}

Coeff PadicRing::power_coeff(unsigned k) const noexcept {
  return k >= prec_ ? Coeff{0} : Coeff{powers_[k]};
}

unsigned PadicRing::valuation(Coeff c) const noexcept {
  if (c.residue == 0) return prec_;
  unsigned v = 0;
  std::uint64_t r = c.residue;
  while (r % p_ == 0) {
    r /= p_;
    ++v;
  }
  return v;
}

Coeff PadicRing::add(Coeff a, Coeff b) const noexcept {
  const std::uint64_t m = modulus();
  std::uint64_t s = a.residue + b.residue;  // both < 2^62, no overflow
  if (s >= m) s -= m;
  return Coeff{s};
}

Coeff PadicRing::sub(Coeff a, Coeff b) const noexcept {
  return a.residue >= b.residue ? Coeff{a.residue - b.residue}
                                : Coeff{a.residue + modulus() - b.residue};
}

Coeff PadicRing::neg(Coeff a) const noexcept {
  return a.residue == 0 ? a : Coeff{modulus() - a.residue};
}

Coeff PadicRing::mul(Coeff a, Coeff b) const noexcept {
  return Coeff{mulmod(a.residue, b.residue, modulus())};
}

Coeff PadicRing::unit_part(Coeff c) const noexcept {
  if (c.residue == 0) return c;
  std::uint64_t r = c.residue;
  while (r % p_ == 0) r /= p_;
  return Coeff{r};
}

Coeff PadicRing::inverse_unit(Coeff u) const {
  if (u.residue % p_ == 0) throw ZeroDivisorError("coefficient is not a unit");
  return Coeff{invmod(u.residue, modulus())};
}

Coeff PadicRing::reduce_below(Coeff c, unsigned k) const noexcept {
  return k >= prec_ ? c : Coeff{c.residue % powers_[k]};
}

Coeff PadicRing::divide_exact(Coeff a, Coeff b) const {
  if (b.residue == 0) throw ZeroDivisorError("exact division by zero mod p^N");
  if (a.residue == 0) return a;
  const unsigned va = valuation(a);
  const unsigned vb = valuation(b);
  if (vb > va) {
    throw ValuationError("divisor valuation " + std::to_string(vb) +
                         " exceeds dividend valuation " + std::to_string(va));
  }
  const std::uint64_t m = powers_[prec_ - vb];
  const std::uint64_t ua = (a.residue / powers_[va]) % m;
  const std::uint64_t ub = (b.residue / powers_[vb]) % m;
  const std::uint64_t unit = mulmod(ua, invmod(ub, m), m);
  return Coeff{mulmod(powers_[va - vb], unit, m)};
}

}  // namespace tategb
