#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "credalkit/decision.hpp"

#include "test_support.hpp"

using namespace credalkit;
using namespace testsupport;
using examples::coin_family_a;
using examples::coin_family_c;

namespace {

Gamble standard_gamble(const Frame& f, const Rational& eps) {
  return Gamble(f, {-eps, Rational(1), Rational(1), Rational(-2)});
}

}  // namespace

TEST_CASE("expected utility is an exact dot product") {
  ParametricFamily c = coin_family_c();
  Frame f = c.frame();
  const Rational eps(1, 4);
  Gamble g = standard_gamble(f, eps);

  // EU of the mixture member at gamma is -eps * (1 + 3 gamma) / 4
  for (const Rational& gamma : {Rational(0), Rational(1, 3), Rational(1)}) {
    const Rational eu = expected_utility(c.at({gamma}), g);
    CHECK(eu == -eps * (1 + 3 * gamma) / 4);
  }

  Gamble zero(f, {Rational(0), Rational(0), Rational(0), Rational(0)});
  Distribution barycenter(
      f, {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)});
  CHECK(expected_utility(barycenter, zero) == 0);
  CHECK(expected_utility(barycenter, g) == Rational(-1, 16));

  CHECK_THROWS_AS(expected_utility(Distribution(three_atoms(),
                                                {Rational(1), Rational(0), Rational(0)}),
                                   zero),
                  ValidationError);
}

TEST_CASE("gamble evaluation over the mixture family") {
  ParametricFamily fam = coin_family_c();
  DecisionReport r = evaluate_gamble(fam, standard_gamble(fam.frame(), Rational(1, 4)));
  REQUIRE(r.exact_eu_max.has_value());
  CHECK(*r.exact_eu_max == Rational(-1, 16));
  REQUIRE(r.exact_eu_min.has_value());
  CHECK(*r.exact_eu_min == Rational(-1, 4));
  CHECK_FALSE(r.favourable_nonempty);
}

TEST_CASE("gamble evaluation over the iid family matches the closed form") {
  ParametricFamily fam = coin_family_a();
  // EU(theta) = -(4+eps) theta^2 + 6 theta - 2, maximized at theta = 3/(4+eps)
  DecisionReport r = evaluate_gamble(fam, standard_gamble(fam.frame(), Rational(1, 4)));
  REQUIRE(r.exact_eu_max.has_value());
  CHECK(*r.exact_eu_max == Rational(2, 17));  // 9/(4+1/4) - 2
  CHECK(r.favourable_nonempty);
  REQUIRE(r.argmax_parameters.has_value());
  CHECK(std::abs((*r.argmax_parameters)[0] - 12.0 / 17.0) < 1e-6);
  CHECK(std::abs(r.raw_eu_max - 2.0 / 17.0) < 1e-9);

  // at the threshold eps = 1/2 the maximum is exactly 0, which is not favourable
  DecisionReport boundary =
      evaluate_gamble(fam, standard_gamble(fam.frame(), Rational(1, 2)));
  REQUIRE(boundary.exact_eu_max.has_value());
  CHECK(*boundary.exact_eu_max == 0);
  CHECK_FALSE(boundary.favourable_nonempty);

  DecisionReport beyond =
      evaluate_gamble(fam, standard_gamble(fam.frame(), Rational(3, 4)));
  CHECK_FALSE(beyond.favourable_nonempty);
}

TEST_CASE("polytope extremes are attained at vertices") {
  Frame f = four_atoms();
  std::vector<Distribution> vs = {
      Distribution(f, {Rational(1), Rational(0), Rational(0), Rational(0)}),
      Distribution(f, {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}),
      Distribution(f, {Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)}),
  };
  VertexPolytope poly(f, vs);
  Gamble g = standard_gamble(f, Rational(1, 4));
  DecisionReport r = evaluate_gamble(poly, g);

  Rational lo = expected_utility(vs[0], g), hi = lo;
  for (const auto& v : vs) {
    lo = std::min(lo, expected_utility(v, g));
    hi = std::max(hi, expected_utility(v, g));
  }
  CHECK(*r.exact_eu_min == lo);
  CHECK(*r.exact_eu_max == hi);

  // convex mixtures of the vertices never escape the reported range
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> w(0, 7);
  for (int i = 0; i < 100; ++i) {
    Rational w0 = w(rng), w1 = w(rng), w2 = w(rng);
    const Rational total = w0 + w1 + w2;
    if (total == 0) continue;
    std::vector<Rational> probs(4);
    for (std::size_t k = 0; k < 4; ++k)
      probs[k] =
          (w0 * vs[0].probs()[k] + w1 * vs[1].probs()[k] + w2 * vs[2].probs()[k]) / total;
    const Rational eu = expected_utility(Distribution(f, probs), g);
    CHECK(eu >= *r.exact_eu_min);
    CHECK(eu <= *r.exact_eu_max);
  }
}

TEST_CASE("EU is affine in the distribution and the gamble") {
  Frame f = four_atoms();
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> w(1, 9);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> pa(4), pb(4);
    Rational ta = 0, tb = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      pa[k] = w(rng);
      ta += pa[k];
      pb[k] = w(rng);
      tb += pb[k];
    }
    for (std::size_t k = 0; k < 4; ++k) {
      pa[k] /= ta;
      pb[k] /= tb;
    }
    Distribution da(f, pa), db(f, pb);
    Gamble g(f, {Rational(w(rng)), Rational(-w(rng)), Rational(w(rng), 2),
                 Rational(w(rng))});
    const Rational alpha(w(rng), 10);
    std::vector<Rational> mix(4);
    for (std::size_t k = 0; k < 4; ++k)
      mix[k] = alpha * pa[k] + (1 - alpha) * pb[k];
    CHECK(expected_utility(Distribution(f, mix), g) ==
          alpha * expected_utility(da, g) + (1 - alpha) * expected_utility(db, g));
  }
}

TEST_CASE("positive affine utility transforms scale the report") {
  ParametricFamily fam = coin_family_a();
  Frame f = fam.frame();
  Gamble g = standard_gamble(f, Rational(1, 4));
  const Rational a(3), b(1, 2);
  std::vector<Rational> scaled;
  for (const auto& u : g.utilities()) scaled.push_back(a * u + b);
  DecisionReport base = evaluate_gamble(fam, g);
  DecisionReport mapped = evaluate_gamble(fam, Gamble(f, scaled));
  REQUIRE(base.exact_eu_max.has_value());
  REQUIRE(mapped.exact_eu_max.has_value());
  CHECK(*mapped.exact_eu_max == a * *base.exact_eu_max + b);
  CHECK(*mapped.exact_eu_min == a * *base.exact_eu_min + b);

  // pure scaling (b = 0) preserves favourability
  std::vector<Rational> doubled;
  for (const auto& u : g.utilities()) doubled.push_back(2 * u);
  CHECK(evaluate_gamble(fam, Gamble(f, doubled)).favourable_nonempty ==
        base.favourable_nonempty);
}

TEST_CASE("the divergence demonstration separates envelope-equal sets") {
  DivergenceDemo demo = decision_divergence_demo();
  CHECK(demo.epsilon == Rational(1, 4));
  CHECK(demo.envelopes_equal);
  CHECK(demo.family_a.favourable_nonempty);
  CHECK_FALSE(demo.family_c.favourable_nonempty);

  for (const Rational& eps : {Rational(1, 8), Rational(1, 4), Rational(3, 8)}) {
    DivergenceDemo d = decision_divergence_demo(eps);
    CHECK(d.envelopes_equal);
    CHECK(d.family_a.favourable_nonempty);
    CHECK_FALSE(d.family_c.favourable_nonempty);
  }

  // beyond the threshold neither family supports the gamble
  DivergenceDemo flat = decision_divergence_demo(Rational(3, 4));
  CHECK(flat.envelopes_equal);
  CHECK_FALSE(flat.family_a.favourable_nonempty);
  CHECK_FALSE(flat.family_c.favourable_nonempty);

  // comparing a family against itself shows no divergence
  ParametricFamily a = coin_family_a();
  Gamble g = standard_gamble(a.frame(), Rational(1, 4));
  DecisionReport r1 = evaluate_gamble(a, g), r2 = evaluate_gamble(a, g);
  CHECK(envelopes_equal(a, a));
  CHECK(r1.favourable_nonempty == r2.favourable_nonempty);
  CHECK(r1.eu_max == r2.eu_max);
}
