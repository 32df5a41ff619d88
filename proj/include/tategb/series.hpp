#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tategb/context.hpp"
#include "tategb/monomial.hpp"
#include "tategb/padic.hpp"

namespace tategb {

/// A nonzero Tate term c * X^i. The valuation of c is cached.
struct Term {
  Monomial mono;
  Coeff coeff;
  unsigned val = 0;

  TateMonomial tate_monomial() const { return {val, mono}; }
  friend bool operator==(const Term& a, const Term& b) noexcept {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// A Tate series modulo p^N: a finitely supported map X^i -> Z/p^N.
///
/// Terms are kept sorted by the monomial order (largest first) with every
/// coefficient nonzero mod p^N. The leading term, i.e. the maximum under the
/// valuation-first block order, is located after every mutation.
class TateSeries {
 public:
  explicit TateSeries(ContextPtr ctx);

  /// Combines repeated monomials and drops zero coefficients.
  static TateSeries from_terms(ContextPtr ctx, std::vector<std::pair<Monomial, Coeff>> terms);
  static TateSeries constant(ContextPtr ctx, Coeff c);
  static TateSeries monomial(ContextPtr ctx, Coeff c, const Monomial& m);

  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  const Context& context() const noexcept { return *ctx_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Terms in decreasing monomial order.
  std::span<const Term> terms() const noexcept { return terms_; }
  /// Terms in decreasing Tate order (leading term first).
  std::vector<Term> terms_by_tate_order() const;
  Coeff coefficient(const Monomial& m) const;

  /// Gauss valuation: minimum coefficient valuation, N for zero.
  unsigned valuation() const noexcept;
  /// Throws ZeroSeriesError on zero.
  const Term& leading_term() const;
  TateMonomial leading_monomial() const { return leading_term().tate_monomial(); }

  TateSeries& operator+=(const TateSeries& g);
  TateSeries& operator-=(const TateSeries& g);
  friend TateSeries operator+(TateSeries f, const TateSeries& g) { return f += g; }
  friend TateSeries operator-(TateSeries f, const TateSeries& g) { return f -= g; }
  friend TateSeries operator-(const TateSeries& f);
  friend TateSeries operator*(const TateSeries& f, const TateSeries& g);

  TateSeries scaled(Coeff c) const;
  /// c * X^m * this.
  TateSeries mul_term(Coeff c, const Monomial& m) const;
  /// p^t.val * X^t.mono * this.
  TateSeries mul_tate_monomial(const TateMonomial& t) const;
  /// this -= c * X^m * g, in one merge pass.
  void sub_mul_term(Coeff c, const Monomial& m, const TateSeries& g);

  /// Copy without the leading term.
  TateSeries tail() const;
  /// Removes the term at monomial m if present.
  void erase(const Monomial& m);

  /// Reinterprets the series in another context with the same variables and
  /// order but a precision M <= N, reducing every coefficient mod p^M.
  TateSeries truncated(ContextPtr lower) const;
  /// Moves the series to a context with the same ring but different
  /// variables; variable i is sent to variable map[i] of the target.
  TateSeries renamed(ContextPtr target, std::span<const std::size_t> map) const;

  friend bool operator==(const TateSeries& f, const TateSeries& g) noexcept {
    return f.terms_ == g.terms_;
  }

 private:
  void check_same_ring(const TateSeries& g) const;
  void locate_leading();

  ContextPtr ctx_;
  std::vector<Term> terms_;
  std::size_t lead_ = 0;
};

/// Gauss valuation.
inline unsigned gauss_valuation(const TateSeries& f) noexcept { return f.valuation(); }

/// Divides f by p^val(f). Returns the valuation-0 series and the shift.
///
/// The result is only meaningful modulo p^(N - shift); its coefficients are
/// the exact integer quotients of the stored residues. Throws ZeroSeriesError.
std::pair<TateSeries, unsigned> normalize_to_integral(const TateSeries& f);

/// Multiplies f by the inverse of the unit part of its leading coefficient,
/// so the leading coefficient becomes exactly p^val(f).
TateSeries unit_normalized(const TateSeries& f);

}  // namespace tategb
