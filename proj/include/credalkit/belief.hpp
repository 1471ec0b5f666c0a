#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "credalkit/errors.hpp"
#include "credalkit/frame.hpp"
#include "credalkit/rational.hpp"
#include "credalkit/subset_transform.hpp"

namespace credalkit {

/// Basic probability assignment: nonnegative mass on subsets of the frame,
/// m(empty) = 0, total exactly 1. Stored sparsely on its focal elements.
class MassFunction {
 public:
  MassFunction(Frame frame, std::map<std::uint32_t, Rational> masses)
      : frame_(std::move(frame)) {
    Rational total = 0;
    for (auto& [bits, v] : masses) {
      if (bits > frame_.full_mask())
        throw ValidationError("mass on event outside the frame");
      if (v < 0)
        throw ValidationError("negative mass on {" + frame_.format_event(bits) + "}");
      if (v == 0) continue;
      if (bits == 0) throw ValidationError("mass on the empty set must be 0");
      total += v;
      masses_.emplace(bits, v);
    }
    if (total != 1)
      throw ValidationError("mass sum " + to_fraction_string(total) + " != 1");
  }

  /// Total ignorance: all mass on the full frame.
  static MassFunction vacuous(Frame frame) {
    std::map<std::uint32_t, Rational> m{{frame.full_mask(), Rational(1)}};
    return MassFunction(std::move(frame), std::move(m));
  }

  /// Point-valued probability: mass on singletons only.
  static MassFunction bayesian(Frame frame, const std::vector<Rational>& atom_probs) {
    if (atom_probs.size() != frame.size())
      throw ValidationError("probability vector length does not match frame");
    std::map<std::uint32_t, Rational> m;
    for (std::size_t i = 0; i < atom_probs.size(); ++i)
      if (atom_probs[i] != 0) m.emplace(1u << i, atom_probs[i]);
    return MassFunction(std::move(frame), std::move(m));
  }

  const Frame& frame() const noexcept { return frame_; }
  const std::map<std::uint32_t, Rational>& focal() const& noexcept { return masses_; }
  std::map<std::uint32_t, Rational> focal() && { return std::move(masses_); }

  Rational at(std::uint32_t bits) const {
    auto it = masses_.find(bits);
    return it == masses_.end() ? Rational(0) : it->second;
  }

  bool is_bayesian() const {
    for (const auto& [bits, v] : masses_)
      if (std::popcount(bits) != 1) return false;
    return true;
  }

  /// All 2^n values, indexed by bitmask.
  std::vector<Rational> dense() const {
    std::vector<Rational> f(frame_.event_count(), Rational(0));
    for (const auto& [bits, v] : masses_) f[bits] = v;
    return f;
  }

  friend bool operator==(const MassFunction& a, const MassFunction& b) {
    return a.frame_ == b.frame_ && a.masses_ == b.masses_;
  }

 private:
  Frame frame_;
  std::map<std::uint32_t, Rational> masses_;  // focal elements only
};

/// Signed generalization of a mass function: the Moebius transform of an
/// arbitrary capacity. value(empty) = 0 and the values sum to 1; negative
/// entries signal that the capacity is not a belief function.
class MobiusVector {
 public:
  MobiusVector(Frame frame, std::vector<Rational> dense_values)
      : frame_(std::move(frame)), values_(std::move(dense_values)) {
    if (values_.size() != frame_.event_count())
      throw ValidationError("Moebius vector length does not match frame");
    if (values_[0] != 0)
      throw ValidationError("Moebius value on the empty set must be 0");
    Rational total = 0;
    for (const auto& v : values_) total += v;
    if (total != 1)
      throw ValidationError("Moebius values sum " + to_fraction_string(total) + " != 1");
  }

  /// Builds from values on proper subsets; the full-frame entry is forced so
  /// the total is exactly 1 (any explicitly given full-frame value is
  /// recomputed by this convention).
  static MobiusVector with_residual(Frame frame,
                                    const std::map<std::uint32_t, Rational>& values) {
    std::vector<Rational> dense(frame.event_count(), Rational(0));
    Rational partial = 0;
    for (const auto& [bits, v] : values) {
      if (bits > frame.full_mask())
        throw ValidationError("Moebius value on event outside the frame");
      if (bits == 0 && v != 0)
        throw ValidationError("Moebius value on the empty set must be 0");
      if (bits == frame.full_mask()) continue;
      dense[bits] = v;
      partial += v;
    }
    dense[frame.full_mask()] = 1 - partial;
    return MobiusVector(std::move(frame), std::move(dense));
  }

  static MobiusVector from_mass(const MassFunction& m) {
    return MobiusVector(m.frame(), m.dense());
  }

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<Rational>& values() const& noexcept { return values_; }
  std::vector<Rational> values() && { return std::move(values_); }
  Rational at(std::uint32_t bits) const { return values_.at(bits); }

  bool nonnegative() const {
    for (const auto& v : values_)
      if (v < 0) return false;
    return true;
  }

  std::vector<std::uint32_t> negative_events() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < values_.size(); ++s)
      if (values_[s] < 0) out.push_back(s);
    return out;
  }

  /// Reinterprets as a proper mass function; requires all values >= 0.
  MassFunction to_mass() const {
    if (!nonnegative())
      throw NotABeliefFunction("Moebius vector has negative entries");
    std::map<std::uint32_t, Rational> m;
    for (std::uint32_t s = 0; s < values_.size(); ++s)
      if (values_[s] != 0) m.emplace(s, values_[s]);
    return MassFunction(frame_, std::move(m));
  }

  friend bool operator==(const MobiusVector& a, const MobiusVector& b) {
    return a.frame_ == b.frame_ && a.values_ == b.values_;
  }

 private:
  Frame frame_;
  std::vector<Rational> values_;
};

/// Lower/upper value pair on every event. lower(A) plays the role of Bel(A);
/// upper(A) = 1 - lower(complement A) is derived. Hard invariants
/// (lower(empty) = 0, lower(S) = 1) are enforced; inclusion monotonicity and
/// lower <= upper are computed and queryable, since capacities built from
/// signed Moebius vectors may legitimately violate them.
class Capacity {
 public:
  Capacity(Frame frame, std::vector<Rational> lower)
      : frame_(std::move(frame)), lower_(std::move(lower)) {
    if (lower_.size() != frame_.event_count())
      throw ValidationError("capacity length does not match frame");
    if (lower_[0] != 0) throw ValidationError("capacity must assign 0 to the empty set");
    if (lower_[frame_.full_mask()] != 1)
      throw ValidationError("capacity must assign 1 to the full frame");
    monotone_ = true;
    for (std::size_t d = 0; d < frame_.size() && monotone_; ++d)
      for (std::uint32_t s = 0; s <= frame_.full_mask(); ++s)
        if (!(s & (1u << d)) && lower_[s] > lower_[s | (1u << d)]) {
          monotone_ = false;
          break;
        }
    consistent_ = true;
    for (std::uint32_t s = 0; s <= frame_.full_mask(); ++s)
      if (lower_[s] > 1 - lower_[frame_.full_mask() & ~s]) {
        consistent_ = false;
        break;
      }
  }

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<Rational>& lower_values() const& noexcept { return lower_; }
  std::vector<Rational> lower_values() && { return std::move(lower_); }

  Rational lower(std::uint32_t bits) const { return lower_.at(bits); }
  Rational upper(std::uint32_t bits) const {
    return 1 - lower_.at(frame_.full_mask() & ~bits);
  }

  /// lower(A) <= lower(B) whenever A is a subset of B.
  bool inclusion_monotone() const noexcept { return monotone_; }
  /// lower(A) <= upper(A) on every event.
  bool lower_below_upper() const noexcept { return consistent_; }

  friend bool operator==(const Capacity& a, const Capacity& b) {
    return a.frame_ == b.frame_ && a.lower_ == b.lower_;
  }

 private:
  Frame frame_;
  std::vector<Rational> lower_;
  bool monotone_;
  bool consistent_;
};

/// Bel(A) = sum of mass over subsets of A, via the zeta transform.
inline Capacity belief_from_mass(const MassFunction& m) {
  std::vector<Rational> f = m.dense();
  zeta_transform(f);
  return Capacity(m.frame(), std::move(f));
}

/// Same subset-sum applied to a signed Moebius vector. The result is a
/// genuine belief function iff the input is nonnegative; query the returned
/// capacity's flags rather than assuming them.
inline Capacity belief_from_mass(const MobiusVector& m) {
  std::vector<Rational> f = m.values();
  zeta_transform(f);
  return Capacity(m.frame(), std::move(f));
}

/// Moebius inversion: exact inverse of belief_from_mass.
inline MobiusVector mobius_from_capacity(const Capacity& c) {
  std::vector<Rational> f = c.lower_values();
  mobius_transform(f);
  return MobiusVector(c.frame(), std::move(f));
}

/// Pl(A) = 1 - Bel(complement of A).
inline Rational plausibility(const Capacity& c, const EventSet& a) {
  if (a.frame() != c.frame())
    throw ValidationError("event belongs to a different frame");
  return c.upper(a.bits());
}

}  // namespace credalkit
