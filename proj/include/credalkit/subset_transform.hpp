#pragma once

#include <bit>
#include <cassert>
#include <vector>

namespace credalkit {

// In-place fast zeta/Moebius transforms over the subset lattice,
// O(n * 2^n) additions for an array of size 2^n.

/// f[S] <- sum over B subseteq S of f[B]   (subset-sum / zeta transform)
template <typename T>
void zeta_transform(std::vector<T>& f) {
  const std::size_t sz = f.size();
  assert(std::has_single_bit(sz));
  const int n = std::countr_zero(sz);
  for (int d = 0; d < n; ++d)
    for (std::size_t s = 0; s < sz; ++s)
      if (s & (std::size_t{1} << d)) f[s] += f[s ^ (std::size_t{1} << d)];
}

/// Inverse of zeta_transform: recovers f from its subset sums.
template <typename T>
void mobius_transform(std::vector<T>& f) {
  const std::size_t sz = f.size();
  assert(std::has_single_bit(sz));
  const int n = std::countr_zero(sz);
  for (int d = 0; d < n; ++d)
    for (std::size_t s = 0; s < sz; ++s)
      if (s & (std::size_t{1} << d)) f[s] -= f[s ^ (std::size_t{1} << d)];
}

}  // namespace credalkit
