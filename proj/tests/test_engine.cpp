#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tategb/engine.hpp"
#include "tategb/verify.hpp"

using namespace tategb;
using testing::make_ctx;

namespace {

TateSeries S(const ContextPtr& ctx, std::string_view text) { return parse_series(ctx, text); }

std::vector<TateSeries> Ss(const ContextPtr& ctx, std::initializer_list<std::string_view> texts) {
  std::vector<TateSeries> out;
  for (std::string_view t : texts) out.push_back(S(ctx, t));
  return out;
}

constexpr Algorithm all_algos[] = {Algorithm::buchberger, Algorithm::pote, Algorithm::vapote};

}  // namespace

TEST_CASE("algorithm names") {
  for (Algorithm a : all_algos) CHECK(parse_algorithm(to_string(a)) == a);
  CHECK_FALSE(parse_algorithm("f4").has_value());
}

TEST_CASE("make_jpair") {
  const auto ctx = make_ctx(5, 3, 2);
  const std::vector<SigPair> pairs{
      {{0, Monomial{1, 0}}, S(ctx, "y^2"), std::nullopt},
      {{0, Monomial{0, 1}}, S(ctx, "x*y"), std::nullopt},
  };
  const auto jp = make_jpair(*ctx, pairs, 0, 1);
  REQUIRE(jp.has_value());
  CHECK(jp->sig == TateMonomial{0, Monomial{2, 0}});
  CHECK(jp->multiplier == TateMonomial{0, Monomial{1, 0}});
  CHECK(jp->source == 0);
  CHECK(jp->lm == TateMonomial{0, Monomial{1, 2}});
  CHECK(materialize(*jp, pairs) == S(ctx, "x*y^2"));
  // Symmetric in the arguments.
  CHECK(make_jpair(*ctx, pairs, 1, 0)->sig == jp->sig);
  CHECK_FALSE(make_jpair(*ctx, pairs, 0, 0).has_value());

  // LM(v1) | LM(v2) and the second scaled signature is larger: p2 itself.
  const std::vector<SigPair> nested{
      {{0, Monomial{0, 0}}, S(ctx, "x"), std::nullopt},
      {{0, Monomial{0, 2}}, S(ctx, "x*y"), std::nullopt},
  };
  const auto own = make_jpair(*ctx, nested, 0, 1);
  REQUIRE(own.has_value());
  CHECK(own->source == 1);
  CHECK(own->multiplier == TateMonomial{0, Monomial{0, 0}});

  const JPair plain = make_plain_jpair(pairs, 0, S(ctx, "5*x"));
  CHECK(plain.sig == TateMonomial{1, Monomial{2, 0}});
  CHECK(plain.lm == TateMonomial{1, Monomial{1, 2}});
}

TEST_CASE("is_covered and sig_criterion") {
  const auto ctx = make_ctx(5, 3, 2);
  const TateMonomial sig{0, Monomial{1, 0}};
  const std::vector<SigPair> g{{sig, S(ctx, "y"), std::nullopt}};
  CHECK(is_covered(*ctx, sig, {0, Monomial{0, 2}}, g));
  CHECK_FALSE(is_covered(*ctx, sig, {0, Monomial{0, 1}}, g));
  CHECK_FALSE(is_covered(*ctx, {0, Monomial{2, 0}}, {0, Monomial{1, 1}}, g));
  CHECK(is_covered(*ctx, {0, Monomial{2, 0}}, {0, Monomial{2, 1}}, g));
  CHECK_FALSE(is_covered(*ctx, sig, {0, Monomial{3, 3}}, {}));
  CHECK_FALSE(is_covered(*ctx, {0, Monomial{0, 1}}, {0, Monomial{3, 3}}, g));

  const std::vector<TateMonomial> s{{0, Monomial{1, 0}}};
  CHECK(sig_criterion({1, Monomial{2, 3}}, s));
  CHECK_FALSE(sig_criterion({1, Monomial{0, 3}}, s));
  CHECK_FALSE(sig_criterion({1, Monomial{2, 3}}, {}));
  CHECK(sig_criterion(s[0], s));
  CHECK_FALSE(sig_criterion({0, Monomial{1, 0}}, std::vector<TateMonomial>{{1, Monomial{1, 0}}}));
}

TEST_CASE("minimize_and_reduce") {
  const auto ctx = make_ctx(5, 3, 2);
  CHECK(minimize_and_reduce(Ss(ctx, {"x", "x^2"})) == Ss(ctx, {"x"}));
  CHECK(minimize_and_reduce(Ss(ctx, {"3*x"})) == Ss(ctx, {"x"}));
  CHECK(minimize_and_reduce(Ss(ctx, {"15*x + 1"})) == Ss(ctx, {"1"}));
  CHECK(minimize_and_reduce(Ss(ctx, {"15*x^2 + 10*x"})) == Ss(ctx, {"5*x^2 + 45*x"}));
  // Sorted by leading monomial, largest first.
  const auto sorted = minimize_and_reduce(Ss(ctx, {"5*x^3", "y", "x + 7"}));
  CHECK(sorted == Ss(ctx, {"x + 7", "y"}));
  const auto reduced = Ss(ctx, {"x + 5", "y"});
  CHECK(minimize_and_reduce(reduced) == reduced);
}

TEST_CASE("small systems under every engine") {
  const auto ctx = make_ctx(5, 3, 2);
  for (Algorithm a : all_algos) {
    CAPTURE(to_string(a));
    CHECK(reduced_gb(a, Ss(ctx, {"x + 5", "y"})).basis == Ss(ctx, {"x + 5", "y"}));
    CHECK(reduced_gb(a, Ss(ctx, {"x"})).basis == Ss(ctx, {"x"}));
    CHECK(reduced_gb(a, Ss(ctx, {"x*y + 1", "x*y + 1"})).basis == Ss(ctx, {"x*y + 1"}));
    CHECK(reduced_gb(a, Ss(ctx, {"x + 5*y + 1", "x^2 + 5*x*y + x"})).basis == Ss(ctx, {"x + 5*y + 1"}));
    CHECK(reduced_gb(a, std::vector<TateSeries>{}).basis.empty());
  }
  const auto ctx2 = make_ctx(5, 2, 1);
  CHECK(reduced_gb(Algorithm::vapote, Ss(ctx2, {"5*x"})).basis == Ss(ctx2, {"5*x"}));
}

TEST_CASE("pote: a multiple of an earlier generator adds nothing") {
  const auto ctx = make_ctx(5, 3, 2);
  EngineOptions opts;
  opts.interreduce = false;
  const GbResult r = pote(Ss(ctx, {"x + 5*y + 1", "x^2 + 5*x*y + x"}), opts);
  CHECK(r.stats.zero_reductions + r.stats.skipped_cover + r.stats.skipped_sig >= 1);
  CHECK(minimize_and_reduce(r.basis) == Ss(ctx, {"x + 5*y + 1"}));
}

TEST_CASE("vapote pops inputs by valuation") {
  const auto ctx = make_ctx(5, 3, 2);
  std::vector<TateSeries> order;
  vapote(Ss(ctx, {"5*y", "x + 5"}), {}, [&](const IncrementSnapshot& s) { order.push_back(s.f); });
  REQUIRE(order.size() == 2);
  CHECK(order[0] == S(ctx, "x + 5"));
  CHECK(order[1] == S(ctx, "5*y"));
}

TEST_CASE("rational mode normalizes generators") {
  const SystemFile sys = parse_system("p=5 prec=3 vars=x,y ring=rational\n---\n5*x + 25\n");
  CHECK(reduced_gb(Algorithm::pote, sys.generators).basis == Ss(sys.ctx, {"x + 5"}));
  const SystemFile integral = parse_system("p=5 prec=3 vars=x,y\n---\n5*x + 25\n");
  CHECK(reduced_gb(Algorithm::pote, integral.generators).basis == Ss(integral.ctx, {"5*x + 25"}));
}

TEST_CASE("colon signatures") {
  const auto ctx = make_ctx(5, 3, 2);
  for (const bool interreduce : {true, false}) {
    CAPTURE(interreduce);
    EngineOptions opts;
    opts.interreduce = interreduce;
    opts.debug_track_syzygies = true;
    std::vector<std::vector<ColonEntry>> colons;
    const auto observe = [&](const IncrementSnapshot& s) { colons.push_back(colon_signatures(s)); };

    pote(Ss(ctx, {"x + 5*y", "x*y + 5*y^2"}), opts, observe);
    REQUIRE(colons.size() == 2);
    CHECK(colons[0].empty());
    REQUIRE_FALSE(colons[1].empty());
    CHECK(colons[1][0].sig == TateMonomial{0, ctx->one_monomial()});

    colons.clear();
    pote(Ss(ctx, {"x*y + 1", "x*y + 1"}), opts, observe);
    REQUIRE(colons.size() == 2);
    REQUIRE_FALSE(colons[1].empty());
    CHECK(colons[1][0].sig == TateMonomial{0, ctx->one_monomial()});
  }
}

TEST_CASE("property: stats identity and verified output") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    const testing::GridCase c = testing::grid_case(rng());
    CAPTURE(testing::describe(c.generators));
    for (Algorithm a : all_algos) {
      const GbResult r = reduced_gb(a, c.generators);
      const EngineStats& s = r.stats;
      CHECK(s.skipped_cover + s.skipped_sig + s.reductions == s.jpairs_popped);
      CHECK(s.zero_reductions <= s.reductions);
      CHECK(s.interrupted_reductions == 0);
      CHECK(verify_gb(c.generators, r.basis).ok);
    }
  }
}

TEST_CASE("property: debug syzygies satisfy u*f in the previous ideal") {
  std::mt19937_64 rng(42);
  std::size_t checked = 0;
  for (int i = 0; i < 30; ++i) {
    const testing::GridCase c = testing::grid_case(rng());
    EngineOptions opts;
    opts.debug_track_syzygies = true;
    pote(c.generators, opts, [&](const IncrementSnapshot& s) {
      for (const ColonEntry& e : colon_signatures(s)) {
        REQUIRE(e.u.has_value());
        CHECK(e.u->leading_monomial() == e.sig);
        CHECK(top_reduce(*e.u * s.f, s.previous_basis).result.is_zero());
        ++checked;
      }
      for (const SigPair& p : s.pairs) {
        REQUIRE(p.u.has_value());
        CHECK(top_reduce(*p.u * s.f - p.v, s.previous_basis).result.is_zero());
      }
    });
  }
  CHECK(checked > 0);
}

TEST_CASE("verify_gb rejects incomplete bases") {
  const auto ctx = make_ctx(5, 3, 2);
  const auto sys = Ss(ctx, {"x + 5", "y"});
  CHECK(verify_gb(sys, Ss(ctx, {"x + 5", "y"})).ok);
  CHECK(verify_gb(sys, Ss(ctx, {"x + 5", "y"}), true).ok);
  const VerifyReport empty = verify_gb(sys, {});
  CHECK_FALSE(empty.ok);
  CHECK(empty.counterexample.find("generator 1") != std::string::npos);
  CHECK_FALSE(verify_gb(sys, Ss(ctx, {"x + 5"})).ok);
  // Spans the ideal of x but is not in the ideal of the system.
  CHECK_FALSE(verify_gb(Ss(ctx, {"x^2"}), Ss(ctx, {"x"}), true).ok);
  CHECK(verify_gb(Ss(ctx, {"x^2"}), Ss(ctx, {"x"})).ok);
}
