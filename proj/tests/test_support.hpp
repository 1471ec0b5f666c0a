#pragma once

// Shared fixtures: the capacities of the classic tables entered as literal
// values (independent of the library's envelope/transform machinery), and
// deterministic random generators for the property suites.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "credalkit/belief.hpp"
#include "credalkit/frame.hpp"
#include "credalkit/rational.hpp"

namespace testsupport {

using credalkit::Capacity;
using credalkit::Frame;
using credalkit::MassFunction;
using credalkit::Rational;

inline Frame three_atoms() { return Frame({"1", "2", "3"}); }
inline Frame four_atoms() { return Frame({"1", "2", "3", "4"}); }

// Dempster's die: Bel 0 on singletons, 1/2 on pairs.
inline Capacity table1_capacity() {
  Frame f = three_atoms();
  std::vector<Rational> lower = {
      {0},            // {}
      {0}, {0},       // 1, 2
      Rational(1, 2),  // 12
      {0},            // 3
      Rational(1, 2), Rational(1, 2),  // 13, 23
      {1},            // 123
  };
  return Capacity(f, std::move(lower));
}

// Two iid flips of a heads-biased coin. Index = bitmask over atoms 1..4.
inline std::vector<Rational> table2_lower() {
  const Rational q(1, 4), h(1, 2), t(3, 4);
  return {{0}, q, {0}, h, {0}, h, {0}, t, {0}, h, {0}, t, {0}, t, {0}, {1}};
}
inline Capacity table2_capacity() { return Capacity(four_atoms(), table2_lower()); }

// Two independent flips of possibly different heads-biased coins: as table 2
// except Bel(124) = Bel(134) = 1/2.
inline std::vector<Rational> table3_lower() {
  std::vector<Rational> lower = table2_lower();
  lower[0b1011] = Rational(1, 2);  // {124}
  lower[0b1101] = Rational(1, 2);  // {134}
  return lower;
}
inline Capacity table3_capacity() { return Capacity(four_atoms(), table3_lower()); }

// Masses of table 2: 1/4 on each of {1}, {12}, {13}, {14}.
inline MassFunction table2_mass() {
  Frame f = four_atoms();
  return MassFunction(f, {{0b0001, Rational(1, 4)},
                          {0b0011, Rational(1, 4)},
                          {0b0101, Rational(1, 4)},
                          {0b1001, Rational(1, 4)}});
}

inline Frame frame_of_size(std::size_t n) {
  const char* labels = "abcdefghijklmnop";
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.emplace_back(1, labels[i]);
  return Frame(std::move(atoms));
}

// Random mass function with small denominators: up to max_focal focal
// elements with integer weights 1..9, normalized.
inline MassFunction random_mass(std::mt19937& rng, const Frame& frame,
                                int max_focal = 5) {
  std::uniform_int_distribution<std::uint32_t> event(1, frame.full_mask());
  std::uniform_int_distribution<int> weight(1, 9);
  std::uniform_int_distribution<int> count(1, max_focal);
  std::map<std::uint32_t, Rational> weights;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) weights[event(rng)] += weight(rng);
  Rational total = 0;
  for (const auto& [bits, w] : weights) total += w;
  for (auto& [bits, w] : weights) w /= total;
  return MassFunction(frame, std::move(weights));
}

// Random Bayesian mass with full support.
inline MassFunction random_full_support_bayesian(std::mt19937& rng, const Frame& frame) {
  std::uniform_int_distribution<int> weight(1, 9);
  std::vector<Rational> probs(frame.size());
  Rational total = 0;
  for (auto& p : probs) {
    p = weight(rng);
    total += p;
  }
  for (auto& p : probs) p /= total;
  return MassFunction::bayesian(frame, probs);
}

// Random inclusion-monotone capacity with denominator `denom`, not
// necessarily a belief function: random integer levels pushed up to their
// subset maxima.
inline Capacity random_monotone_capacity(std::mt19937& rng, const Frame& frame,
                                         int denom = 8) {
  std::uniform_int_distribution<int> level(0, denom);
  std::vector<int> v(frame.event_count());
  for (auto& x : v) x = level(rng);
  v[0] = 0;
  v[frame.full_mask()] = denom;
  for (std::uint32_t s = 1; s <= frame.full_mask(); ++s)
    for (std::size_t d = 0; d < frame.size(); ++d)
      if (s & (1u << d)) v[s] = std::max(v[s], v[s ^ (1u << d)]);
  std::vector<Rational> lower(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) lower[i] = Rational(v[i], denom);
  return Capacity(frame, std::move(lower));
}

}  // namespace testsupport
