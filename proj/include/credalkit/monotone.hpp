#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "credalkit/belief.hpp"
#include "credalkit/errors.hpp"
#include "credalkit/frame.hpp"
#include "credalkit/rational.hpp"

namespace credalkit {

/// Requested Choquet monotonicity order: a finite p >= 1, or infinity.
struct MonotoneOrder {
  static MonotoneOrder finite(int p) {
    if (p < 1) throw ValidationError("monotonicity order must be >= 1");
    return MonotoneOrder{false, p};
  }
  static MonotoneOrder infinity() { return MonotoneOrder{true, 0}; }

  bool is_infinite;
  int p;
};

/// Result of a monotonicity check. On failure `witness` holds the first
/// violating tuple (A_1, ..., A_k) in ascending-bitmask lexicographic order,
/// smallest k first. For the order-infinity check, which decides via Moebius
/// nonnegativity, the witness lists the events carrying negative Moebius mass.
struct MonotonicityReport {
  bool holds;
  std::vector<EventSet> witness;
};

namespace detail {

// Inclusion-exclusion test for one tuple; values are the capacity's lower
// values scaled to a common denominator when Int is an integer type.
template <typename Int>
bool tuple_satisfies(const std::vector<Int>& bel,
                     const std::vector<std::uint32_t>& tuple,
                     std::vector<std::uint32_t>& inter_scratch) {
  const std::size_t k = tuple.size();
  const std::size_t subsets = std::size_t{1} << k;
  if (inter_scratch.size() < subsets) inter_scratch.resize(subsets);
  std::uint32_t all_union = 0;
  for (std::uint32_t m : tuple) all_union |= m;
  inter_scratch[0] = ~std::uint32_t{0};
  Int rhs{};
  for (std::size_t K = 1; K < subsets; ++K) {
    const int low = std::countr_zero(K);
    inter_scratch[K] = inter_scratch[K & (K - 1)] & tuple[low];
    if (std::popcount(K) & 1)
      rhs += bel[inter_scratch[K]];
    else
      rhs -= bel[inter_scratch[K]];
  }
  return bel[all_union] >= rhs;
}

template <typename Int>
std::optional<std::vector<std::uint32_t>> first_violation(
    const std::vector<Int>& bel, std::uint32_t full_mask, int max_order) {
  std::vector<std::uint32_t> events;
  for (std::uint32_t m = 1; m <= full_mask; ++m) events.push_back(m);
  const int max_k =
      std::min<int>(max_order, static_cast<int>(events.size()));
  std::vector<std::uint32_t> inter;
  for (int k = 2; k <= max_k; ++k) {
    // combinations of k distinct nonempty events, lexicographic
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<std::uint32_t> tuple(k);
    while (true) {
      for (int i = 0; i < k; ++i) tuple[i] = events[idx[i]];
      if (!tuple_satisfies(bel, tuple, inter)) return tuple;
      int i = k - 1;
      while (i >= 0 && idx[i] == static_cast<int>(events.size()) - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// Lower values scaled to int64 numerators over a common denominator, when
// that is small enough for overflow-free inclusion-exclusion sums.
inline std::optional<std::vector<std::int64_t>> common_denominator_values(
    const std::vector<Rational>& lower, int max_order) {
  BigInt lcm = 1;
  for (const auto& v : lower)
    lcm = boost::multiprecision::lcm(lcm, denominator(v));
  // |sum| <= 2^k * lcm must stay within int64
  BigInt bound = lcm << std::min(max_order, 40);
  if (bound > std::numeric_limits<std::int64_t>::max() / 4) return std::nullopt;
  std::vector<std::int64_t> out(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) {
    BigInt scaled = numerator(lower[i]) * (lcm / denominator(lower[i]));
    out[i] = scaled.convert_to<std::int64_t>();
  }
  return out;
}

}  // namespace detail

/// Checks the inclusion-exclusion inequality
///   Bel(A_1 u ... u A_k)  >=  sum over nonempty K of (-1)^{|K|+1} Bel(inter)
/// for all tuples of k distinct nonempty events, 2 <= k <= p (k = 1 is
/// trivially an equality; tuples are deduplicated up to permutation and
/// duplicate members are skipped, since neither strengthens the condition).
/// Order infinity is decided by Moebius nonnegativity instead.
///
/// The exhaustive finite check is rejected for frames with more than 5 atoms
/// unless p <= 2.
inline MonotonicityReport is_monotone_of_order(const Capacity& c, MonotoneOrder order) {
  const Frame& frame = c.frame();
  if (order.is_infinite) {
    MobiusVector m = mobius_from_capacity(c);
    std::vector<EventSet> witness;
    for (std::uint32_t bits : m.negative_events()) witness.emplace_back(frame, bits);
    return {witness.empty(), std::move(witness)};
  }

  if (frame.size() > 5 && order.p > 2)
    throw ScaleLimit("exhaustive order-" + std::to_string(order.p) +
                     " check not supported beyond 5 atoms");

  std::optional<std::vector<std::uint32_t>> violation;
  if (auto scaled = detail::common_denominator_values(c.lower_values(), order.p))
    violation = detail::first_violation(*scaled, frame.full_mask(), order.p);
  else
    violation = detail::first_violation(c.lower_values(), frame.full_mask(), order.p);

  if (!violation) return {true, {}};
  std::vector<EventSet> witness;
  for (std::uint32_t bits : *violation) witness.emplace_back(frame, bits);
  return {false, std::move(witness)};
}

}  // namespace credalkit
