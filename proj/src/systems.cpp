#include "tategb/systems.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "tategb/errors.hpp"

namespace tategb {
namespace {

TateSeries cube(const TateSeries& f) { return f * f * f; }

}  // namespace

std::pair<TateSeries, TateSeries> tate_curve_coefficients(const ContextPtr& ctx, std::size_t q_var) {
  const PadicRing& zp = ctx->coeffs();
  const std::uint64_t p = zp.prime();
  if (p == 2 || p == 3) {
    throw BadParameterError("the Tate curve coefficients need p >= 5, got " + std::to_string(p));
  }
  std::vector<std::pair<Monomial, Coeff>> a4;
  std::vector<std::pair<Monomial, Coeff>> a6;
  for (unsigned k = 1; k < zp.precision(); ++k) {
    std::uint64_t sigma3 = 0;
    std::uint64_t sigma6 = 0;
    for (std::uint64_t d = 1; d <= k; ++d) {
      if (k % d != 0) continue;
      sigma3 += d * d * d;
      sigma6 += (7 * d * d * d * d * d + 5 * d * d * d) / 12;
    }
    const Coeff pk = zp.power_coeff(k);
    const Monomial qk = ctx->variable(q_var, k);
    const auto lift = [&](std::uint64_t n) {
      return zp.from_integer(static_cast<std::int64_t>(n % zp.modulus()));
    };
    a4.emplace_back(qk, zp.mul(pk, zp.mul(zp.from_integer(5), lift(sigma3))));
    a6.emplace_back(qk, zp.mul(pk, lift(sigma6)));
  }
  return {TateSeries::from_terms(ctx, std::move(a4)), TateSeries::from_terms(ctx, std::move(a6))};
}

std::vector<TateSeries> division_polynomial_sequence(unsigned n, const TateSeries& a4,
                                                     const TateSeries& a6, std::size_t x_var) {
  const ContextPtr& ctx = a4.context_ptr();
  const PadicRing& zp = ctx->coeffs();
  const auto num = [&](std::int64_t k) { return TateSeries::constant(ctx, zp.from_integer(k)); };
  const auto x = [&](unsigned e) { return TateSeries::monomial(ctx, zp.one(), ctx->variable(x_var, e)); };

  const TateSeries b2 = num(1);
  const TateSeries b4 = num(2) * a4;
  const TateSeries b6 = num(4) * a6;
  const TateSeries b8 = a6 - a4 * a4;
  // (2y + x)^2 reduced by the curve equation.
  const TateSeries big_f = num(4) * x(3) + b2 * x(2) + num(2) * b4 * x(1) + b6;
  const TateSeries big_f2 = big_f * big_f;

  std::vector<TateSeries> f;
  f.reserve(std::max(n + 1, 5u));
  f.push_back(TateSeries(ctx));
  f.push_back(num(1));
  f.push_back(num(1));
  f.push_back(num(3) * x(4) + b2 * x(3) + num(3) * b4 * x(2) + num(3) * b6 * x(1) + b8);
  f.push_back(num(2) * x(6) + b2 * x(5) + num(5) * b4 * x(4) + num(10) * b6 * x(3) +
              num(10) * b8 * x(2) + (b2 * b8 - b4 * b6) * x(1) + (b4 * b8 - b6 * b6));
  for (unsigned m = 5; m <= n; ++m) {
    const unsigned k = m / 2;
    if (m % 2 == 1) {
      const TateSeries lhs = f[k + 2] * cube(f[k]);
      const TateSeries rhs = f[k - 1] * cube(f[k + 1]);
      f.push_back(k % 2 == 0 ? big_f2 * lhs - rhs : lhs - big_f2 * rhs);
    } else {
      f.push_back(f[k] * (f[k + 2] * f[k - 1] * f[k - 1] - f[k - 2] * f[k + 1] * f[k + 1]));
    }
  }
  f.resize(n + 1, TateSeries(ctx));
  return f;
}

TateSeries division_polynomial(unsigned ell, const TateSeries& a4, const TateSeries& a6,
                               std::size_t x_var) {
  if (ell % 2 == 0) {
    throw BadParameterError("only odd division polynomials are supported, got " + std::to_string(ell));
  }
  return division_polynomial_sequence(ell, a4, a6, x_var)[ell];
}

SystemFile torsion_system(const TorsionSystemSpec& spec) {
  if (spec.p == 2 || spec.p == 3) {
    throw BadParameterError("torsion systems need p >= 5, got " + std::to_string(spec.p));
  }
  if (spec.ell < 3 || spec.ell % 2 == 0) {
    throw BadParameterError("ell must be odd and at least 3, got " + std::to_string(spec.ell));
  }
  SystemFile out;
  try {
    out.ctx = Context::create(spec.p, spec.prec, {"x", "q1", "q2"});
  } catch (const ContextError& e) {
    throw BadParameterError(e.what());
  }
  for (std::size_t q : {1, 2}) {
    const auto [a4, a6] = tate_curve_coefficients(out.ctx, q);
    out.generators.push_back(division_polynomial(spec.ell, a4, a6, 0));
  }
  return out;
}

std::vector<std::string> default_var_names(std::size_t n) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(n <= 4 ? small[i] : "x" + std::to_string(i + 1));
  return names;
}

std::vector<TateSeries> random_system(const RandomSystemSpec& spec, const ContextPtr& ctx) {
  const PadicRing& zp = ctx->coeffs();
  if (spec.max_terms == 0 || spec.max_val >= zp.precision()) {
    throw BadParameterError("random system bounds: need max_terms > 0 and max_val < prec");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> n_terms(1, spec.max_terms);
  std::uniform_int_distribution<unsigned> exponent(0, spec.max_deg);
  std::uniform_int_distribution<unsigned> valuation(0, spec.max_val);

  std::size_t monomial_count = 1;
  for (std::size_t i = 0; i < ctx->num_vars() && monomial_count < spec.max_terms; ++i) {
    monomial_count *= spec.max_deg + 1;
  }

  std::vector<TateSeries> out;
  while (out.size() < spec.n_gens) {
    std::vector<std::pair<Monomial, Coeff>> terms;
    const std::size_t count = std::min(n_terms(rng), monomial_count);
    while (terms.size() < count) {
      Monomial m = ctx->one_monomial();
      for (std::size_t i = 0; i < ctx->num_vars(); ++i) m = m.with_added(i, exponent(rng));
      // Repeated exponents would merge and could raise the valuation.
      if (std::any_of(terms.begin(), terms.end(), [&](const auto& t) { return t.first == m; })) continue;
      const unsigned v = valuation(rng);
      std::uniform_int_distribution<std::uint64_t> residue(0, zp.power(zp.precision() - v) - 1);
      std::uint64_t u = residue(rng);
      if (u % zp.prime() == 0) u += 1;
      terms.emplace_back(m, zp.mul(zp.power_coeff(v), Coeff{u % zp.modulus()}));
    }
    TateSeries g = TateSeries::from_terms(ctx, std::move(terms));
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace tategb
