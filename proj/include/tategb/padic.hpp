#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace tategb {

/// An element of Z/p^N Z, stored as its residue in [0, p^N).
///
/// The p-adic valuation is not stored; it is recomputed from the residue by
/// the owning PadicRing. Zero has valuation N.
struct Coeff {
  std::uint64_t residue = 0;

  friend bool operator==(Coeff, Coeff) = default;
};

/// Largest supported modulus p^N.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in the truncated valuation ring Z_p / p^N Z_p = Z/p^N Z.
class PadicRing {
 public:
  /// Throws ContextError if p is not prime, N is zero, or p^N > 2^62.
  PadicRing(std::uint64_t p, unsigned precision);

  std::uint64_t prime() const noexcept { return p_; }
  unsigned precision() const noexcept { return prec_; }
  std::uint64_t modulus() const noexcept { return powers_.back(); }

  /// p^k for 0 <= k <= N.
  std::uint64_t power(unsigned k) const { return powers_.at(k); }

  Coeff from_integer(std::int64_t z) const noexcept;
  /// Reduces a decimal digit string of any length modulo p^N.
  Coeff from_decimal(std::string_view digits, bool negative) const;
  /// The class of p^k (zero when k >= N).
  Coeff power_coeff(unsigned k) const noexcept;
  Coeff one() const noexcept { return Coeff{1}; }

  /// Largest v <= N with p^v dividing the residue.
  unsigned valuation(Coeff c) const noexcept;
  bool is_zero(Coeff c) const noexcept { return c.residue == 0; }

  Coeff add(Coeff a, Coeff b) const noexcept;
  Coeff sub(Coeff a, Coeff b) const noexcept;
  Coeff neg(Coeff a) const noexcept;
  Coeff mul(Coeff a, Coeff b) const noexcept;

  /// Returns q with q*b = a mod p^N and val(q) = val(a) - val(b).
  ///
  /// q is only determined modulo p^(N - val(b)); the representative returned
  /// is p^(val(a)-val(b)) * (ua * ub^-1) reduced into [0, p^(N - val(b))),
  /// where ua, ub are the unit parts of the residues.
  /// Throws ZeroDivisorError if b = 0 and ValuationError if val(b) > val(a).
  Coeff divide_exact(Coeff a, Coeff b) const;

  /// residue / p^val(residue); a unit whenever c is nonzero.
  Coeff unit_part(Coeff c) const noexcept;
  /// Inverse of a unit modulo p^N. Throws ZeroDivisorError on non-units.
  Coeff inverse_unit(Coeff u) const;
  /// The residue of c reduced into [0, p^k) (k <= N).
  Coeff reduce_below(Coeff c, unsigned k) const noexcept;

 private:
  std::uint64_t p_;
  unsigned prec_;
  std::vector<std::uint64_t> powers_;
};

}  // namespace tategb
