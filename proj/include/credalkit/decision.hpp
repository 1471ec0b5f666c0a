#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "credalkit/box_minimize.hpp"
#include "credalkit/credal.hpp"
#include "credalkit/errors.hpp"
#include "credalkit/frame.hpp"
#include "credalkit/polynomial.hpp"
#include "credalkit/rational.hpp"
#include "credalkit/worked_examples.hpp"

namespace credalkit {

/// One utility per atom. Preference is judged against the zero option: a
/// gamble is preferred when its expected utility is strictly positive.
class Gamble {
 public:
  Gamble(Frame frame, std::vector<Rational> utilities)
      : frame_(std::move(frame)), utilities_(std::move(utilities)) {
    if (utilities_.size() != frame_.size())
      throw ValidationError("gamble needs one utility per atom");
  }

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<Rational>& utilities() const& noexcept { return utilities_; }
  std::vector<Rational> utilities() && { return std::move(utilities_); }

 private:
  Frame frame_;
  std::vector<Rational> utilities_;
};

inline Rational expected_utility(const Distribution& p, const Gamble& g) {
  if (p.frame() != g.frame())
    throw ValidationError("gamble and distribution frames differ");
  Rational total = 0;
  for (std::size_t i = 0; i < p.probs().size(); ++i)
    total += p.probs()[i] * g.utilities()[i];
  return total;
}

/// Expected-utility range of a gamble over a credal set. `favourable_nonempty`
/// says whether some member strictly prefers the gamble to the zero option
/// (eu_max > 0, strict; a boundary maximum of exactly 0 does not count).
struct DecisionReport {
  double eu_min;
  double eu_max;
  bool favourable_nonempty;
  std::optional<std::vector<double>> argmax_parameters;
  // exact values when available: always for polytopes, for families when the
  // optimum snaps to a small rational
  std::optional<Rational> exact_eu_min;
  std::optional<Rational> exact_eu_max;
  double raw_eu_min;
  double raw_eu_max;
};

/// EU is linear in P, so the extrema over a polytope sit at vertices; exact.
inline DecisionReport evaluate_gamble(const VertexPolytope& set, const Gamble& g) {
  if (set.frame() != g.frame())
    throw ValidationError("gamble and credal set frames differ");
  Rational lo = expected_utility(set.vertices().front(), g);
  Rational hi = lo;
  for (const auto& v : set.vertices()) {
    const Rational eu = expected_utility(v, g);
    lo = std::min(lo, eu);
    hi = std::max(hi, eu);
  }
  DecisionReport r{to_double(lo), to_double(hi), hi > 0,   std::nullopt,
                   lo,            hi,            to_double(lo), to_double(hi)};
  return r;
}

/// Box optimization of the EU polynomial, to about 1e-9; extrema within 1e-7
/// of a rational with denominator <= 64 are snapped so that the strict
/// favourability test is exact at thresholds.
inline DecisionReport evaluate_gamble(const ParametricFamily& set, const Gamble& g,
                                      SnapOptions snap = {}) {
  if (set.frame() != g.frame())
    throw ValidationError("gamble and credal set frames differ");
  Polynomial eu(set.dim());
  for (std::size_t i = 0; i < set.frame().size(); ++i)
    eu += set.atom_polynomials()[i] * g.utilities()[i];
  const auto compiled = eu.compile();
  auto objective_min = [&](const std::vector<double>& x) { return compiled.eval(x.data()); };
  auto objective_max = [&](const std::vector<double>& x) { return -compiled.eval(x.data()); };
  const auto box = set.box_as_doubles();
  const BoxMinimum lo = minimize_on_box(objective_min, box);
  const BoxMinimum hi = minimize_on_box(objective_max, box);

  DecisionReport r;
  r.raw_eu_min = lo.value;
  r.raw_eu_max = -hi.value;
  r.exact_eu_min = snap_to_rational(r.raw_eu_min, snap.max_denominator, snap.tol);
  r.exact_eu_max = snap_to_rational(r.raw_eu_max, snap.max_denominator, snap.tol);
  r.eu_min = r.exact_eu_min ? to_double(*r.exact_eu_min) : r.raw_eu_min;
  r.eu_max = r.exact_eu_max ? to_double(*r.exact_eu_max) : r.raw_eu_max;
  r.favourable_nonempty = r.exact_eu_max ? (*r.exact_eu_max > 0) : (r.raw_eu_max > 0);
  r.argmax_parameters = hi.point;
  return r;
}

/// Two credal sets with identical envelopes whose decisions differ: the iid
/// coin family supports the gamble <-eps, 1, 1, -2> for some members when
/// 0 < eps < 1/2, while the mixture family never does. Lower/upper values
/// alone cannot tell the two models apart.
struct DivergenceDemo {
  Rational epsilon;
  Gamble gamble;
  bool envelopes_equal;
  DecisionReport family_a;
  DecisionReport family_c;
};

inline DivergenceDemo decision_divergence_demo(const Rational& epsilon = Rational(1, 4)) {
  const ParametricFamily a = examples::coin_family_a();
  const ParametricFamily c = examples::coin_family_c();
  Gamble gamble(a.frame(), {-epsilon, Rational(1), Rational(1), Rational(-2)});
  DivergenceDemo demo{epsilon, gamble, envelopes_equal(a, c),
                      evaluate_gamble(a, gamble), evaluate_gamble(c, gamble)};
  return demo;
}

}  // namespace credalkit
