#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "credalkit/belief.hpp"
#include "credalkit/errors.hpp"
#include "credalkit/frame.hpp"
#include "credalkit/rational.hpp"

namespace credalkit {

/// Output of Dempster's rule: the normalized combination together with the
/// conflict kappa (total product mass on empty intersections), 0 <= kappa < 1.
struct CombinationResult {
  MassFunction combined;
  Rational conflict;
};

/// Orthogonal sum of two mass functions on the same frame:
///   m12(A) = sum over S inter T = A of m1(S) m2(T), normalized by 1 - kappa.
/// Throws TotalConflict when kappa = 1.
inline CombinationResult dempster_combine(const MassFunction& m1, const MassFunction& m2) {
  if (m1.frame() != m2.frame())
    throw ValidationError("combination requires a common frame");
  std::map<std::uint32_t, Rational> acc;
  Rational conflict = 0;
  for (const auto& [s, v1] : m1.focal())
    for (const auto& [t, v2] : m2.focal()) {
      const std::uint32_t inter = s & t;
      if (inter == 0)
        conflict += v1 * v2;
      else
        acc[inter] += v1 * v2;
    }
  if (conflict == 1)
    throw TotalConflict("total conflict: every focal intersection is empty");
  const Rational norm = 1 - conflict;
  for (auto& [bits, v] : acc) v /= norm;
  return {MassFunction(m1.frame(), std::move(acc)), conflict};
}

/// Bayes' rule on a point-valued prior: renormalizes the prior over the
/// atoms of `evidence`. Restricted to Bayesian priors.
inline MassFunction bayes_condition(const MassFunction& prior, const EventSet& evidence) {
  if (prior.frame() != evidence.frame())
    throw ValidationError("evidence belongs to a different frame");
  if (!prior.is_bayesian())
    throw NotBayesian("conditioning requires a Bayesian prior");
  Rational p_evidence = 0;
  for (const auto& [bits, v] : prior.focal())
    if ((bits & evidence.bits()) == bits) p_evidence += v;
  if (p_evidence == 0)
    throw ZeroProbabilityEvidence("prior assigns probability 0 to the evidence");
  std::map<std::uint32_t, Rational> posterior;
  for (const auto& [bits, v] : prior.focal())
    if ((bits & evidence.bits()) == bits) posterior.emplace(bits, v / p_evidence);
  return MassFunction(prior.frame(), std::move(posterior));
}

/// True iff combining the prior with `conditioner` under Dempster's rule
/// reproduces bayes_condition(prior, evidence) exactly. The conditioner's
/// focal elements must be subsets of the evidence.
inline bool combine_reproduces_conditioning(const MassFunction& prior,
                                            const MassFunction& conditioner,
                                            const EventSet& evidence) {
  if (conditioner.frame() != prior.frame())
    throw ValidationError("conditioner belongs to a different frame");
  for (const auto& [bits, v] : conditioner.focal())
    if ((bits & ~evidence.bits()) != 0)
      throw ValidationError("conditioner focal element {" +
                            prior.frame().format_event(bits) +
                            "} is not a subset of the evidence");
  const MassFunction posterior = bayes_condition(prior, evidence);
  return dempster_combine(prior, conditioner).combined == posterior;
}

/// True iff every focal element of m lies inside `evidence` and the mass is
/// constant across each cardinality class of subsets of the evidence. Such
/// conditioners preserve the prior's ratios under combination.
inline bool is_cardinality_uniform_conditioner(const MassFunction& m,
                                               const EventSet& evidence) {
  if (m.frame() != evidence.frame())
    throw ValidationError("evidence belongs to a different frame");
  for (const auto& [bits, v] : m.focal())
    if ((bits & ~evidence.bits()) != 0) return false;
  const std::uint32_t ev = evidence.bits();
  // enumerate subsets of the evidence grouped by cardinality
  std::vector<std::vector<Rational>> by_card(evidence.cardinality() + 1);
  for (std::uint32_t sub = ev;; sub = (sub - 1) & ev) {
    if (sub != 0) by_card[std::popcount(sub)].push_back(m.at(sub));
    if (sub == 0) break;
  }
  for (const auto& cls : by_card) {
    if (cls.empty()) continue;
    for (const auto& v : cls)
      if (v != cls.front()) return false;
  }
  return true;
}

/// Refinement of a coarse frame: each coarse atom maps to a nonempty block of
/// the fine frame; blocks are pairwise disjoint and cover the fine frame.
class Refining {
 public:
  Refining(Frame coarse, Frame fine, std::vector<std::uint32_t> images)
      : coarse_(std::move(coarse)), fine_(std::move(fine)), images_(std::move(images)) {
    if (images_.size() != coarse_.size())
      throw ValidationError("refining must map every coarse atom");
    std::uint32_t seen = 0;
    for (std::uint32_t img : images_) {
      if (img == 0) throw ValidationError("refining image must be nonempty");
      if (img > fine_.full_mask())
        throw ValidationError("refining image outside the fine frame");
      if (img & seen) throw ValidationError("refining images must be disjoint");
      seen |= img;
    }
    if (seen != fine_.full_mask())
      throw ValidationError("refining images must cover the fine frame");
  }

  static Refining identity(const Frame& frame) {
    std::vector<std::uint32_t> images;
    for (std::size_t i = 0; i < frame.size(); ++i) images.push_back(1u << i);
    return Refining(frame, frame, std::move(images));
  }

  const Frame& coarse() const noexcept { return coarse_; }
  const Frame& fine() const noexcept { return fine_; }

  std::uint32_t image_of(std::uint32_t coarse_bits) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (coarse_bits & (1u << i)) out |= images_[i];
    return out;
  }

 private:
  Frame coarse_;
  Frame fine_;
  std::vector<std::uint32_t> images_;
};

/// Vacuous extension along a refining: each focal element carries its mass to
/// the union of its atoms' images.
inline MassFunction refine(const MassFunction& m, const Refining& r) {
  if (m.frame() != r.coarse())
    throw ValidationError("mass function is not on the refining's coarse frame");
  std::map<std::uint32_t, Rational> out;
  for (const auto& [bits, v] : m.focal()) out[r.image_of(bits)] += v;
  return MassFunction(r.fine(), std::move(out));
}

/// Models two flips of a coin with m(H) = 1/2, m(S) = 1/2 by refining the
/// single-flip frame twice (first flip: H -> {1,2}; second flip: H -> {1,3})
/// and combining the refined pieces under Dempster's rule. The result differs
/// from the two-flip credal model on the events {1,4} and S.
inline CombinationResult two_flip_by_combination() {
  Frame flip({"H", "T"});
  Frame two({"1", "2", "3", "4"});
  MassFunction single(flip, {{flip.parse_event("H"), Rational(1, 2)},
                             {flip.full_mask(), Rational(1, 2)}});
  Refining first(flip, two, {two.parse_event("12"), two.parse_event("34")});
  Refining second(flip, two, {two.parse_event("13"), two.parse_event("24")});
  return dempster_combine(refine(single, first), refine(single, second));
}

}  // namespace credalkit
