#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "credalkit/credal.hpp"
#include "credalkit/worked_examples.hpp"

#include "test_support.hpp"

using namespace credalkit;
using namespace testsupport;
using examples::coin_family_a;
using examples::coin_family_b;
using examples::coin_family_c;

namespace {

// Independent check for family minima: exhaustive evaluation on a dense
// parameter grid (exact member construction, double accumulation).
double dense_grid_lower(const ParametricFamily& fam, std::uint32_t bits,
                        std::size_t points_per_dim) {
  std::vector<Polynomial::Compiled> atoms;
  for (const auto& p : fam.atom_polynomials()) atoms.push_back(p.compile());
  const auto box = fam.box_as_doubles();
  const std::size_t dim = box.size();
  std::vector<std::size_t> counter(dim, 0);
  std::vector<double> x(dim);
  double best = 2.0;
  while (true) {
    for (std::size_t i = 0; i < dim; ++i)
      x[i] = box[i].first +
             (box[i].second - box[i].first) * counter[i] / (points_per_dim - 1);
    double total = 0;
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (bits & (1u << a)) total += atoms[a].eval(x.data());
    best = std::min(best, total);
    std::size_t i = 0;
    while (i < dim && ++counter[i] == points_per_dim) counter[i++] = 0;
    if (i == dim) break;
  }
  return best;
}

}  // namespace

TEST_CASE("distribution invariants") {
  Frame f = four_atoms();
  CHECK_THROWS_AS(Distribution(f, {Rational(1), Rational(0), Rational(0)}),
                  ValidationError);
  CHECK_THROWS_AS(
      Distribution(f, {Rational(1), Rational(1), Rational(0), Rational(-1)}),
      ValidationError);
  CHECK_THROWS_AS(
      Distribution(f, {Rational(1, 2), Rational(1, 4), Rational(0), Rational(0)}),
      ValidationError);
  Distribution d(f, {Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 8)});
  CHECK(d.event_probability(0b0011) == Rational(3, 4));
}

TEST_CASE("family invariants") {
  Frame pair({"a", "b"});
  std::vector<std::string> vars = {"t"};
  CHECK_THROWS_AS(
      ParametricFamily(pair, vars, {{Rational(0), Rational(1)}},
                       {parse_polynomial("t", vars), parse_polynomial("t", vars)}),
      ValidationError);  // does not sum to 1
  CHECK_THROWS_AS(
      ParametricFamily(pair, vars, {{Rational(0), Rational(1)}},
                       {parse_polynomial("2*t", vars), parse_polynomial("1-2*t", vars)}),
      ValidationError);  // negative on part of the box
  CHECK_THROWS_AS(
      ParametricFamily(pair, vars, {{Rational(1), Rational(0)}},
                       {parse_polynomial("t", vars), parse_polynomial("1-t", vars)}),
      ValidationError);  // empty interval
  CHECK_NOTHROW(coin_family_a());
  CHECK_NOTHROW(coin_family_b());
  CHECK_NOTHROW(coin_family_c());
}

TEST_CASE("family members evaluate exactly at rational parameters") {
  ParametricFamily fam = coin_family_a();
  Distribution p = fam.at({Rational(3, 4)});
  CHECK(p.probs() ==
        std::vector<Rational>{Rational(9, 16), Rational(3, 16), Rational(3, 16),
                              Rational(1, 16)});
  CHECK_THROWS_AS(fam.at({Rational(1, 4)}), ValidationError);  // outside the box
}

TEST_CASE("lower and upper probabilities of the coin families") {
  ParametricFamily a = coin_family_a();
  Frame f = a.frame();
  CHECK(lower_probability(a, f.parse_event("1")) == Catch::Approx(0.25).margin(1e-9));
  CHECK(upper_probability(a, f.parse_event("2")) == Catch::Approx(0.25).margin(1e-9));
  CHECK(lower_probability(a, f.full_mask()) == 1.0);
  CHECK(upper_probability(a, 0) == 0.0);

  ParametricFamily b = coin_family_b();
  CHECK(lower_probability(b, f.parse_event("124")) == Catch::Approx(0.5).margin(1e-9));
  CHECK(upper_probability(b, f.parse_event("2")) == Catch::Approx(0.5).margin(1e-9));
}

TEST_CASE("polytope lower probability is an exact vertex minimum") {
  Frame f = four_atoms();
  Distribution d1(f, {Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)});
  Distribution d2(f, {Rational(1), Rational(0), Rational(0), Rational(0)});
  VertexPolytope poly(f, {d1, d2});
  CHECK(lower_probability(poly, 0b0001) == Rational(1, 2));
  CHECK(upper_probability(poly, 0b0001) == 1);
  CHECK(lower_probability(poly, 0b0011) == 1);

  VertexPolytope point(f, {d1});
  Capacity env = envelope(point);
  for (std::uint32_t s = 0; s <= f.full_mask(); ++s)
    CHECK(env.lower(s) == d1.event_probability(s));  // additive envelope
}

TEST_CASE("envelopes of the coin families reproduce the tables exactly") {
  CHECK(envelope(coin_family_a()) == table2_capacity());
  CHECK(envelope(coin_family_b()) == table3_capacity());
  CHECK(envelope(coin_family_c()) == table2_capacity());

  EnvelopeResult env = envelope_detailed(coin_family_a());
  for (std::uint32_t s = 0; s <= env.capacity.frame().full_mask(); ++s)
    CHECK(std::abs(env.raw_lower[s] - to_double(env.capacity.lower(s))) <= 1e-7);
}

TEST_CASE("representability of the three families and the die") {
  RepresentabilityReport a = ds_representable(coin_family_a());
  CHECK(a.representable);
  CHECK(a.violations.empty());
  CHECK(a.mobius.to_mass() == table2_mass());

  RepresentabilityReport b = ds_representable(coin_family_b());
  CHECK_FALSE(b.representable);
  REQUIRE(b.violations.size() == 2);
  CHECK(b.violations[0].to_string() == "124");
  CHECK(b.violations[1].to_string() == "134");
  CHECK(b.mobius.at(b.violations[0].bits()) == Rational(-1, 4));
  CHECK(b.mobius.at(b.violations[1].bits()) == Rational(-1, 4));

  RepresentabilityReport die = ds_representable(examples::dempster_die());
  CHECK_FALSE(die.representable);
  REQUIRE(die.violations.size() == 1);
  CHECK(die.violations[0].bits() == die.capacity.frame().full_mask());
  CHECK(die.mobius.at(die.violations[0].bits()) == Rational(-1, 2));

  RepresentabilityReport c = ds_representable(coin_family_c());
  CHECK(c.representable);
}

TEST_CASE("envelope equality detects table coincidence and difference") {
  CHECK(envelopes_equal(coin_family_a(), coin_family_c()));
  CHECK_FALSE(envelopes_equal(coin_family_a(), coin_family_b()));
  CHECK(envelopes_equal(coin_family_b(), coin_family_b()));

  // the difference shows up at Pl(2): 1/4 for A, 1/2 for B
  Capacity ea = envelope(coin_family_a()), eb = envelope(coin_family_b());
  Frame f = ea.frame();
  CHECK(ea.upper(f.parse_event("2")) == Rational(1, 4));
  CHECK(eb.upper(f.parse_event("2")) == Rational(1, 2));
}

TEST_CASE("grid samples of a family are exact members") {
  VertexPolytope two = convex_closure_sample(coin_family_c(), 2);
  Frame f = two.frame();
  REQUIRE(two.vertices().size() == 2);
  CHECK(two.vertices()[0] ==
        Distribution(f, {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}));
  CHECK(two.vertices()[1] ==
        Distribution(f, {Rational(1), Rational(0), Rational(0), Rational(0)}));

  VertexPolytope three = convex_closure_sample(coin_family_a(), 3);
  const Distribution expected(
      f, {Rational(9, 16), Rational(3, 16), Rational(3, 16), Rational(1, 16)});
  bool found = false;
  for (const auto& v : three.vertices()) found = found || v == expected;
  CHECK(found);

  CHECK_THROWS_AS(convex_closure_sample(coin_family_a(), 1), ValidationError);
}

TEST_CASE("duality holds on both credal representations") {
  ParametricFamily b = coin_family_b();
  Frame f = b.frame();
  for (std::uint32_t s = 0; s <= f.full_mask(); ++s) {
    const std::uint32_t comp = f.full_mask() & ~s;
    CHECK(upper_probability(b, s) ==
          Catch::Approx(1.0 - lower_probability(b, comp)).margin(1e-9));
  }

  std::mt19937 rng(41);
  std::uniform_int_distribution<int> weight(0, 5);
  std::vector<Distribution> vertices;
  for (int v = 0; v < 5; ++v) {
    std::vector<Rational> probs(f.size());
    Rational total = 0;
    for (auto& p : probs) {
      p = weight(rng);
      total += p;
    }
    if (total == 0) probs[0] = total = 1;
    for (auto& p : probs) p /= total;
    vertices.emplace_back(f, probs);
  }
  VertexPolytope poly(f, vertices);
  for (std::uint32_t s = 0; s <= f.full_mask(); ++s) {
    const std::uint32_t comp = f.full_mask() & ~s;
    CHECK(upper_probability(poly, s) == 1 - lower_probability(poly, comp));
  }
}

TEST_CASE("envelope dominance: every member dominates the lower envelope") {
  for (const ParametricFamily& fam : {coin_family_a(), coin_family_b(), coin_family_c()}) {
    Capacity env = envelope(fam);
    VertexPolytope sample = convex_closure_sample(fam, 4);
    for (const auto& v : sample.vertices())
      for (std::uint32_t s = 0; s <= fam.frame().full_mask(); ++s)
        CHECK(v.event_probability(s) >= env.lower(s));
  }
}

TEST_CASE("box optimizer agrees with a dense grid") {
  ParametricFamily a = coin_family_a();
  Frame f = a.frame();
  for (std::uint32_t s = 1; s < f.full_mask(); ++s)
    CHECK(lower_probability(a, s) ==
          Catch::Approx(dense_grid_lower(a, s, 2001)).margin(1e-6));

  ParametricFamily b = coin_family_b();
  for (std::uint32_t s : {f.parse_event("2"), f.parse_event("23"), f.parse_event("124")})
    CHECK(lower_probability(b, s) ==
          Catch::Approx(dense_grid_lower(b, s, 301)).margin(1e-5));
}

TEST_CASE("barycentric projection of simplex landmarks") {
  Frame f = four_atoms();
  auto corner = barycentric_coordinates(
      Distribution(f, {Rational(1), Rational(0), Rational(0), Rational(0)}));
  CHECK(corner[0] == 0.0);
  CHECK(corner[1] == 0.0);
  CHECK(corner[2] == 0.0);

  auto centroid = barycentric_coordinates(Distribution(
      f, {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}));
  CHECK(centroid[0] == Catch::Approx(0.5).margin(1e-12));
  CHECK(centroid[1] == Catch::Approx((std::sqrt(3.0) / 2.0 + std::sqrt(3.0) / 6.0) / 4.0)
                           .margin(1e-12));
  CHECK(centroid[2] == Catch::Approx(std::sqrt(6.0) / 12.0).margin(1e-12));

  auto midpoint = barycentric_coordinates(
      Distribution(f, {Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)}));
  CHECK(midpoint[0] == Catch::Approx(0.5).margin(1e-12));
  CHECK(midpoint[1] == 0.0);
  CHECK(midpoint[2] == 0.0);

  CHECK_THROWS_AS(barycentric_coordinates(Distribution(
                      three_atoms(), {Rational(1), Rational(0), Rational(0)})),
                  WrongFrameSize);
}
