#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "credalkit/belief.hpp"
#include "credalkit/credal.hpp"
#include "credalkit/frame.hpp"
#include "credalkit/fusion.hpp"
#include "credalkit/polynomial.hpp"
#include "credalkit/polytope.hpp"
#include "credalkit/rational.hpp"

// Canonical constructions from the Dempster-Shafer and imprecise-probability
// literature, used by the golden reports and the test suites.

namespace credalkit::examples {

/// Frame {1,2,3,4} of two coin flips: 1=HH, 2=HT, 3=TH, 4=TT.
inline Frame two_flip_frame() { return Frame({"1", "2", "3", "4"}); }

namespace detail {
inline ParametricFamily make_family(Frame frame, std::vector<std::string> params,
                                    std::vector<std::pair<Rational, Rational>> box,
                                    std::vector<std::string> atom_exprs) {
  std::vector<Polynomial> atoms;
  for (const auto& e : atom_exprs) atoms.push_back(parse_polynomial(e, params));
  return ParametricFamily(std::move(frame), std::move(params), std::move(box),
                          std::move(atoms));
}
}  // namespace detail

/// Two flips of one coin biased for heads: independent, identically
/// distributed, theta in [1/2, 1].
inline ParametricFamily coin_family_a() {
  return detail::make_family(
      two_flip_frame(), {"t"}, {{Rational(1, 2), Rational(1)}},
      {"t^2", "t*(1-t)", "(1-t)*t", "(1-t)^2"});
}

/// Two coins, each biased for heads but not necessarily alike: independence
/// only, theta1, theta2 in [1/2, 1].
inline ParametricFamily coin_family_b() {
  return detail::make_family(
      two_flip_frame(), {"t1", "t2"},
      {{Rational(1, 2), Rational(1)}, {Rational(1, 2), Rational(1)}},
      {"t1*t2", "t1*(1-t2)", "(1-t1)*t2", "(1-t1)*(1-t2)"});
}

/// Mixture model: flip a fair coin twice or a two-headed coin twice, in an
/// unknown ratio gamma in [0, 1].
inline ParametricFamily coin_family_c() {
  return detail::make_family(
      two_flip_frame(), {"g"}, {{Rational(0), Rational(1)}},
      {"(1+3*g)/4", "(1-g)/4", "(1-g)/4", "(1-g)/4"});
}

/// Dempster's die: the three ways the up and down faces of a die sum to seven,
/// each with belief 0 and plausibility 1/2.
inline Capacity die_capacity() {
  Frame frame({"1", "2", "3"});
  std::vector<Rational> lower(frame.event_count(), Rational(0));
  for (std::uint32_t s = 1; s < frame.full_mask(); ++s)
    if (std::popcount(s) == 2) lower[s] = Rational(1, 2);
  lower[frame.full_mask()] = 1;
  return Capacity(frame, std::move(lower));
}

/// The credal set realizing the die bounds, with vertices recovered from the
/// bounds by brute-force half-space intersection.
inline VertexPolytope dempster_die() {
  return enumerate_envelope_vertices(die_capacity());
}

/// Zadeh's conflict example: two witnesses each put mass 1-eps on a different
/// atom and eps on a shared one; combination concentrates everything on the
/// shared atom.
struct ZadehPair {
  MassFunction m1;
  MassFunction m2;
};
inline ZadehPair zadeh_pair(const Rational& eps = Rational(1, 100)) {
  Frame frame({"A", "B", "C"});
  MassFunction m1(frame, {{frame.parse_event("A"), 1 - eps},
                          {frame.parse_event("B"), eps}});
  MassFunction m2(frame, {{frame.parse_event("C"), 1 - eps},
                          {frame.parse_event("B"), eps}});
  return {std::move(m1), std::move(m2)};
}

/// Two experimenters independently report P(H) = 1/4.
inline MassFunction quarter_head_assessment() {
  Frame frame({"H", "T"});
  return MassFunction::bayesian(frame, {Rational(1, 4), Rational(3, 4)});
}

/// Bayesian prior (1/2, 1/4, 1/4) on {A,B,C} used by the conditioning examples.
inline MassFunction conditioning_prior() {
  Frame frame({"A", "B", "C"});
  return MassFunction::bayesian(frame,
                                {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
}

/// Single coin flip with m(H) = 1/2 and the rest uncommitted.
inline MassFunction single_flip_mass() {
  Frame frame({"H", "T"});
  return MassFunction(frame, {{frame.parse_event("H"), Rational(1, 2)},
                              {frame.full_mask(), Rational(1, 2)}});
}

}  // namespace credalkit::examples
