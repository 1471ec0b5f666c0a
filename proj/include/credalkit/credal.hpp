#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "credalkit/belief.hpp"
#include "credalkit/box_minimize.hpp"
#include "credalkit/errors.hpp"
#include "credalkit/frame.hpp"
#include "credalkit/polynomial.hpp"
#include "credalkit/rational.hpp"

namespace credalkit {

/// A point-valued probability distribution over the frame's atoms, exact.
class Distribution {
 public:
  Distribution(Frame frame, std::vector<Rational> probs)
      : frame_(std::move(frame)), probs_(std::move(probs)) {
    if (probs_.size() != frame_.size())
      throw ValidationError("probability vector length does not match frame");
    Rational total = 0;
    for (const auto& p : probs_) {
      if (p < 0) throw ValidationError("probabilities must be nonnegative");
      total += p;
    }
    if (total != 1)
      throw ValidationError("probabilities sum " + to_fraction_string(total) + " != 1");
  }

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<Rational>& probs() const& noexcept { return probs_; }
  std::vector<Rational> probs() && { return std::move(probs_); }

  Rational event_probability(std::uint32_t bits) const {
    Rational total = 0;
    for (std::size_t i = 0; i < probs_.size(); ++i)
      if (bits & (1u << i)) total += probs_[i];
    return total;
  }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.frame_ == b.frame_ && a.probs_ == b.probs_;
  }
  friend bool operator<(const Distribution& a, const Distribution& b) {
    return a.probs_ < b.probs_;
  }

 private:
  Frame frame_;
  std::vector<Rational> probs_;
};

/// Convex set given by its (deduplicated) vertex list.
class VertexPolytope {
 public:
  VertexPolytope(Frame frame, std::vector<Distribution> vertices)
      : frame_(std::move(frame)) {
    if (vertices.empty()) throw ValidationError("polytope needs at least one vertex");
    std::set<std::vector<Rational>> seen;
    for (auto& v : vertices) {
      if (v.frame() != frame_)
        throw ValidationError("vertex belongs to a different frame");
      if (seen.insert(v.probs()).second) vertices_.push_back(std::move(v));
    }
  }

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<Distribution>& vertices() const& noexcept { return vertices_; }
  std::vector<Distribution> vertices() && { return std::move(vertices_); }

 private:
  Frame frame_;
  std::vector<Distribution> vertices_;
};

/// Convex set described parametrically: one polynomial per atom over a closed
/// parameter box. The atom polynomials must sum identically to 1 and be
/// nonnegative on the box (checked on a coarse grid at construction).
class ParametricFamily {
 public:
  ParametricFamily(Frame frame, std::vector<std::string> param_names,
                   std::vector<std::pair<Rational, Rational>> box,
                   std::vector<Polynomial> atom_polys)
      : frame_(std::move(frame)),
        params_(std::move(param_names)),
        box_(std::move(box)),
        atoms_(std::move(atom_polys)) {
    if (params_.empty()) throw ValidationError("parametric family needs parameters");
    if (box_.size() != params_.size())
      throw ValidationError("box must bound every parameter");
    for (const auto& [lo, hi] : box_)
      if (lo > hi) throw ValidationError("parameter interval is empty");
    if (atoms_.size() != frame_.size())
      throw ValidationError("family needs one polynomial per atom");
    Polynomial sum(params_.size());
    for (const auto& p : atoms_) {
      if (p.dim() != params_.size())
        throw ValidationError("atom polynomial has wrong dimension");
      sum += p;
    }
    if (!(sum == Polynomial::constant(params_.size(), Rational(1))))
      throw ValidationError("atom polynomials must sum identically to 1");
    check_nonnegative_on_grid();
  }

  const Frame& frame() const noexcept { return frame_; }
  std::size_t dim() const noexcept { return params_.size(); }
  const std::vector<std::string>& param_names() const& noexcept { return params_; }
  std::vector<std::string> param_names() && { return std::move(params_); }
  const std::vector<std::pair<Rational, Rational>>& box() const& noexcept { return box_; }
  std::vector<std::pair<Rational, Rational>> box() && { return std::move(box_); }
  const std::vector<Polynomial>& atom_polynomials() const& noexcept { return atoms_; }
  std::vector<Polynomial> atom_polynomials() && { return std::move(atoms_); }

  std::vector<std::pair<double, double>> box_as_doubles() const {
    std::vector<std::pair<double, double>> out;
    for (const auto& [lo, hi] : box_) out.emplace_back(to_double(lo), to_double(hi));
    return out;
  }

  /// P(A) as a polynomial in the parameters.
  Polynomial event_polynomial(std::uint32_t bits) const {
    Polynomial p(params_.size());
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (bits & (1u << i)) p += atoms_[i];
    return p;
  }

  /// Exact member distribution at a rational parameter point.
  Distribution at(const std::vector<Rational>& point) const {
    if (point.size() != dim())
      throw ValidationError("parameter point has wrong dimension");
    for (std::size_t i = 0; i < point.size(); ++i)
      if (point[i] < box_[i].first || point[i] > box_[i].second)
        throw ValidationError("parameter point outside the box");
    std::vector<Rational> probs;
    probs.reserve(atoms_.size());
    for (const auto& p : atoms_) probs.push_back(p.eval(point));
    return Distribution(frame_, std::move(probs));
  }

 private:
  void check_nonnegative_on_grid() const {
    auto dbox = box_as_doubles();
    std::vector<Polynomial::Compiled> compiled;
    for (const auto& p : atoms_) compiled.push_back(p.compile());
    const unsigned k = 17;
    std::vector<unsigned> counter(dim(), 0);
    std::vector<double> x(dim());
    while (true) {
      for (std::size_t i = 0; i < dim(); ++i)
        x[i] = dbox[i].first + (dbox[i].second - dbox[i].first) * counter[i] / (k - 1);
      for (std::size_t a = 0; a < compiled.size(); ++a)
        if (compiled[a].eval(x.data()) < -1e-9)
          throw ValidationError("atom polynomial for {" + frame_.label(a) +
                                "} is negative on the box");
      std::size_t i = 0;
      while (i < dim() && ++counter[i] == k) counter[i++] = 0;
      if (i == dim()) break;
    }
  }

  Frame frame_;
  std::vector<std::string> params_;
  std::vector<std::pair<Rational, Rational>> box_;
  std::vector<Polynomial> atoms_;
};

/// Exact minimum of P(A) over the polytope; linear in P, so attained at a vertex.
inline Rational lower_probability(const VertexPolytope& set, std::uint32_t bits) {
  if (bits > set.frame().full_mask()) throw ValidationError("event outside the frame");
  Rational best = set.vertices().front().event_probability(bits);
  for (std::size_t i = 1; i < set.vertices().size(); ++i)
    best = std::min(best, set.vertices()[i].event_probability(bits));
  return best;
}

inline Rational upper_probability(const VertexPolytope& set, std::uint32_t bits) {
  if (bits > set.frame().full_mask()) throw ValidationError("event outside the frame");
  Rational best = set.vertices().front().event_probability(bits);
  for (std::size_t i = 1; i < set.vertices().size(); ++i)
    best = std::max(best, set.vertices()[i].event_probability(bits));
  return best;
}

namespace detail {

struct FamilyExtremum {
  double value;
  std::vector<double> point;
};

inline FamilyExtremum minimize_event(const ParametricFamily& fam, std::uint32_t bits,
                                     bool maximize, GridRefineOptions opts = {}) {
  std::vector<Polynomial::Compiled> compiled;
  for (std::size_t i = 0; i < fam.frame().size(); ++i)
    if (bits & (1u << i)) compiled.push_back(fam.atom_polynomials()[i].compile());
  auto objective = [&](const std::vector<double>& x) {
    double total = 0;
    for (const auto& c : compiled) total += c.eval(x.data());
    return maximize ? -total : total;
  };
  BoxMinimum m = minimize_on_box(objective, fam.box_as_doubles(), opts);
  return {maximize ? -m.value : m.value, std::move(m.point)};
}

}  // namespace detail

/// Minimum of P(A) over the box, to about 1e-9 absolute accuracy.
inline double lower_probability(const ParametricFamily& set, std::uint32_t bits) {
  if (bits > set.frame().full_mask()) throw ValidationError("event outside the frame");
  if (bits == 0) return 0.0;
  if (bits == set.frame().full_mask()) return 1.0;
  return detail::minimize_event(set, bits, false).value;
}

inline double upper_probability(const ParametricFamily& set, std::uint32_t bits) {
  if (bits > set.frame().full_mask()) throw ValidationError("event outside the frame");
  if (bits == 0) return 0.0;
  if (bits == set.frame().full_mask()) return 1.0;
  return detail::minimize_event(set, bits, true).value;
}

/// Snapping policy for numerically computed envelopes: values within `tol` of
/// a rational with denominator <= max_denominator are replaced by it.
struct SnapOptions {
  unsigned max_denominator = 64;
  double tol = 1e-7;
};

/// Event-wise lower envelope as a Capacity, with the raw (pre-snap) minima
/// retained for inspection.
struct EnvelopeResult {
  Capacity capacity;
  std::vector<double> raw_lower;  // indexed by event bitmask
};

inline EnvelopeResult envelope_detailed(const VertexPolytope& set) {
  std::vector<Rational> lower(set.frame().event_count());
  std::vector<double> raw(lower.size());
  for (std::uint32_t s = 0; s <= set.frame().full_mask(); ++s) {
    lower[s] = lower_probability(set, s);
    raw[s] = to_double(lower[s]);
  }
  return {Capacity(set.frame(), std::move(lower)), std::move(raw)};
}

inline EnvelopeResult envelope_detailed(const ParametricFamily& set,
                                        SnapOptions snap = {}) {
  const std::uint32_t full = set.frame().full_mask();
  std::vector<Rational> lower(set.frame().event_count());
  std::vector<double> raw(lower.size());
  lower[full] = 1;
  raw[full] = 1.0;
  for (std::uint32_t s = 1; s < full; ++s) {
    raw[s] = lower_probability(set, s);
    if (auto r = snap_to_rational(raw[s], snap.max_denominator, snap.tol))
      lower[s] = *r;
    else
      lower[s] = Rational(raw[s]);  // exact binary value of the double
  }
  return {Capacity(set.frame(), std::move(lower)), std::move(raw)};
}

template <typename CredalSet>
Capacity envelope(const CredalSet& set) {
  return envelope_detailed(set).capacity;
}

/// Whether the set's lower/upper envelope is realizable as a belief function,
/// decided by Moebius nonnegativity of the envelope.
struct RepresentabilityReport {
  Capacity capacity;
  MobiusVector mobius;
  bool representable;
  std::vector<EventSet> violations;  // events with negative Moebius value
};

template <typename CredalSet>
RepresentabilityReport ds_representable(const CredalSet& set) {
  EnvelopeResult env = envelope_detailed(set);
  MobiusVector mobius = mobius_from_capacity(env.capacity);
  std::vector<EventSet> violations;
  for (std::uint32_t bits : mobius.negative_events())
    violations.emplace_back(env.capacity.frame(), bits);
  const bool representable = violations.empty();
  return {std::move(env.capacity), std::move(mobius), representable,
          std::move(violations)};
}

/// True iff the two sets induce identical lower envelopes on every event
/// (after snapping), i.e. they are indistinguishable by lower/upper values.
template <typename S1, typename S2>
bool envelopes_equal(const S1& a, const S2& b) {
  if (a.frame() != b.frame())
    throw ValidationError("envelope comparison requires a common frame");
  return envelope(a) == envelope(b);
}

/// Uniform-grid sample of the family, returned as a vertex polytope. This is
/// an inner approximation of the convex closure: every sampled point is a
/// member, but the hull of the samples may miss parts of the closure.
inline VertexPolytope convex_closure_sample(const ParametricFamily& fam,
                                            std::size_t samples_per_dim) {
  if (samples_per_dim < 2)
    throw ValidationError("need at least 2 samples per dimension");
  const std::size_t dim = fam.dim();
  std::vector<Distribution> points;
  std::vector<std::size_t> counter(dim, 0);
  std::vector<Rational> x(dim);
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) {
      const auto& [lo, hi] = fam.box()[i];
      x[i] = lo + (hi - lo) * Rational(counter[i], samples_per_dim - 1);
    }
    points.push_back(fam.at(x));
    std::size_t i = 0;
    while (i < dim && ++counter[i] == samples_per_dim) counter[i++] = 0;
    if (i == dim) break;
  }
  return VertexPolytope(fam.frame(), std::move(points));
}

/// Projects a 4-atom distribution onto a regular unit tetrahedron: vertex i
/// of the tetrahedron is weighted by p_i. Used for geometry export.
inline std::array<double, 3> barycentric_coordinates(const Distribution& p) {
  if (p.frame().size() != 4)
    throw WrongFrameSize("barycentric coordinates require a 4-atom frame");
  static const std::array<std::array<double, 3>, 4> kVertices = {{
      {0.0, 0.0, 0.0},
      {1.0, 0.0, 0.0},
      {0.5, std::sqrt(3.0) / 2.0, 0.0},
      {0.5, std::sqrt(3.0) / 6.0, std::sqrt(6.0) / 3.0},
  }};
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    const double w = to_double(p.probs()[i]);
    for (std::size_t d = 0; d < 3; ++d) out[d] += w * kVertices[i][d];
  }
  return out;
}

}  // namespace credalkit
