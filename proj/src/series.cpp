#include "tategb/series.hpp"

#include <algorithm>
#include <unordered_map>

#include "tategb/errors.hpp"

namespace tategb {

TateSeries::TateSeries(ContextPtr ctx) : ctx_(std::move(ctx)) {}

TateSeries TateSeries::from_terms(ContextPtr ctx, std::vector<std::pair<Monomial, Coeff>> terms) {
  const PadicRing& zp = ctx->coeffs();
  std::unordered_map<Monomial, Coeff> acc;
  acc.reserve(terms.size());
  for (auto& [m, c] : terms) {
    if (m.size() != ctx->num_vars()) throw Error("monomial arity does not match the context");
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) it->second = zp.add(it->second, c);
  }
  TateSeries f(std::move(ctx));
  f.terms_.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (!zp.is_zero(c)) f.terms_.push_back(Term{m, c, zp.valuation(c)});
  }
  const MonomialOrder order = f.ctx_->order();
  std::sort(f.terms_.begin(), f.terms_.end(),
            [order](const Term& a, const Term& b) { return compare(order, a.mono, b.mono) > 0; });
  f.locate_leading();
  return f;
}

TateSeries TateSeries::constant(ContextPtr ctx, Coeff c) {
  const Monomial one = ctx->one_monomial();
  return monomial(std::move(ctx), c, one);
}

TateSeries TateSeries::monomial(ContextPtr ctx, Coeff c, const Monomial& m) {
  TateSeries f(std::move(ctx));
  if (!f.ctx_->coeffs().is_zero(c)) f.terms_.push_back(Term{m, c, f.ctx_->coeffs().valuation(c)});
  return f;
}

void TateSeries::locate_leading() {
  lead_ = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    // Terms are sorted by the monomial order, so the first term of minimal
    // valuation is the leading one.
    if (terms_[i].val < terms_[lead_].val) lead_ = i;
  }
}

void TateSeries::check_same_ring(const TateSeries& g) const {
  if (ctx_ != g.ctx_ && !(*ctx_ == *g.ctx_)) throw Error("series belong to different rings");
}

std::vector<Term> TateSeries::terms_by_tate_order() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  const MonomialOrder order = ctx_->order();
  std::stable_sort(out.begin(), out.end(), [order](const Term& a, const Term& b) {
    return tate_compare(order, a.tate_monomial(), b.tate_monomial()) > 0;
  });
  return out;
}

Coeff TateSeries::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return Coeff{0};
}

unsigned TateSeries::valuation() const noexcept {
  return terms_.empty() ? ctx_->prec() : terms_[lead_].val;
}

const Term& TateSeries::leading_term() const {
  if (terms_.empty()) throw ZeroSeriesError("leading term of the zero series");
  return terms_[lead_];
}

TateSeries& TateSeries::operator+=(const TateSeries& g) {
  sub_mul_term(ctx_->coeffs().neg(ctx_->coeffs().one()), ctx_->one_monomial(), g);
  return *this;
}

TateSeries& TateSeries::operator-=(const TateSeries& g) {
  sub_mul_term(ctx_->coeffs().one(), ctx_->one_monomial(), g);
  return *this;
}

TateSeries operator-(const TateSeries& f) {
  TateSeries r = f;
  const PadicRing& zp = f.context().coeffs();
  for (Term& t : r.terms_) t.coeff = zp.neg(t.coeff);
  return r;
}

TateSeries operator*(const TateSeries& f, const TateSeries& g) {
  f.check_same_ring(g);
  const PadicRing& zp = f.context().coeffs();
  std::unordered_map<Monomial, Coeff> acc;
  acc.reserve(f.size() * g.size());
  const unsigned prec = f.context().prec();
  for (const Term& a : f.terms_) {
    for (const Term& b : g.terms_) {
      if (a.val + b.val >= prec) continue;
      const Coeff c = zp.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, c);
      if (!inserted) it->second = zp.add(it->second, c);
    }
  }
  TateSeries r(f.ctx_);
  r.terms_.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (!zp.is_zero(c)) r.terms_.push_back(Term{m, c, zp.valuation(c)});
  }
  const MonomialOrder order = f.context().order();
  std::sort(r.terms_.begin(), r.terms_.end(),
            [order](const Term& a, const Term& b) { return compare(order, a.mono, b.mono) > 0; });
  r.locate_leading();
  return r;
}

TateSeries TateSeries::scaled(Coeff c) const { return mul_term(c, ctx_->one_monomial()); }

TateSeries TateSeries::mul_term(Coeff c, const Monomial& m) const {
  const PadicRing& zp = ctx_->coeffs();
  TateSeries r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    const Coeff prod = zp.mul(c, t.coeff);
    if (!zp.is_zero(prod)) r.terms_.push_back(Term{t.mono * m, prod, zp.valuation(prod)});
  }
  r.locate_leading();
  return r;
}

TateSeries TateSeries::mul_tate_monomial(const TateMonomial& t) const {
  return mul_term(ctx_->coeffs().power_coeff(t.val), t.mono);
}

void TateSeries::sub_mul_term(Coeff c, const Monomial& m, const TateSeries& g) {
  check_same_ring(g);
  const PadicRing& zp = ctx_->coeffs();
  const MonomialOrder order = ctx_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  const auto end = terms_.end();
  for (const Term& b : g.terms_) {
    const Coeff prod = zp.mul(c, b.coeff);
    if (zp.is_zero(prod)) continue;
    const Monomial bm = b.mono * m;
    while (it != end && compare(order, it->mono, bm) > 0) out.push_back(*it++);
    if (it != end && it->mono == bm) {
      const Coeff diff = zp.sub(it->coeff, prod);
      if (!zp.is_zero(diff)) out.push_back(Term{bm, diff, zp.valuation(diff)});
      ++it;
    } else {
      const Coeff neg = zp.neg(prod);
      out.push_back(Term{bm, neg, zp.valuation(neg)});
    }
  }
  out.insert(out.end(), it, end);
  terms_ = std::move(out);
  locate_leading();
}

TateSeries TateSeries::tail() const {
  TateSeries r = *this;
  if (!r.terms_.empty()) {
    r.terms_.erase(r.terms_.begin() + static_cast<std::ptrdiff_t>(lead_));
    r.locate_leading();
  }
  return r;
}

void TateSeries::erase(const Monomial& m) {
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono == m; });
  if (it != terms_.end()) {
    terms_.erase(it);
    locate_leading();
  }
}

TateSeries TateSeries::truncated(ContextPtr lower) const {
  if (lower->p() != ctx_->p() || lower->prec() > ctx_->prec() || lower->var_names() != ctx_->var_names() ||
      lower->order() != ctx_->order()) {
    throw Error("truncation target must be the same ring at lower precision");
  }
  const PadicRing& zq = lower->coeffs();
  TateSeries r(std::move(lower));
  for (const Term& t : terms_) {
    const Coeff c = ctx_->coeffs().reduce_below(t.coeff, zq.precision());
    if (!zq.is_zero(c)) r.terms_.push_back(Term{t.mono, c, zq.valuation(c)});
  }
  r.locate_leading();
  return r;
}

TateSeries TateSeries::renamed(ContextPtr target, std::span<const std::size_t> map) const {
  if (target->p() != ctx_->p() || target->prec() != ctx_->prec() || map.size() != ctx_->num_vars()) {
    throw Error("renaming target must share p and precision");
  }
  std::vector<std::pair<Monomial, Coeff>> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m = target->one_monomial();
    for (std::size_t i = 0; i < map.size(); ++i) m = m.with_added(map[i], t.mono[i]);
    terms.emplace_back(m, t.coeff);
  }
  return from_terms(std::move(target), std::move(terms));
}

std::pair<TateSeries, unsigned> normalize_to_integral(const TateSeries& f) {
  if (f.is_zero()) throw ZeroSeriesError("cannot normalize the zero series");
  const unsigned shift = f.valuation();
  if (shift == 0) return {f, 0};
  const PadicRing& zp = f.context().coeffs();
  const std::uint64_t div = zp.power(shift);
  std::vector<std::pair<Monomial, Coeff>> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) terms.emplace_back(t.mono, Coeff{t.coeff.residue / div});
  return {TateSeries::from_terms(f.context_ptr(), std::move(terms)), shift};
}

TateSeries unit_normalized(const TateSeries& f) {
  if (f.is_zero()) return f;
  const PadicRing& zp = f.context().coeffs();
  const Coeff unit = zp.unit_part(f.leading_term().coeff);
  if (unit == zp.one()) return f;
  return f.scaled(zp.inverse_unit(unit));
}

}  // namespace tategb
