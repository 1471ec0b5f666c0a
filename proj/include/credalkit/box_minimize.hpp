#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "credalkit/errors.hpp"

namespace credalkit {

/// Recursive grid refinement over a closed box: evaluate a uniform grid,
/// shrink the window around the incumbent, repeat. With the defaults
/// (33 points per dimension, 4x shrink, 12 rounds) this resolves the minima
/// of the low-degree event polynomials used here to better than 1e-9.
struct GridRefineOptions {
  unsigned points_per_dim = 33;
  double shrink = 4.0;
  unsigned rounds = 12;
};

struct BoxMinimum {
  double value;
  std::vector<double> point;
};

template <typename F>
BoxMinimum minimize_on_box(F&& f, const std::vector<std::pair<double, double>>& box,
                           GridRefineOptions opts = {}) {
  const std::size_t dim = box.size();
  if (dim == 0) throw ValidationError("box must have at least one dimension");
  if (opts.points_per_dim < 2 || opts.shrink <= 1.0 || opts.rounds < 1)
    throw ValidationError("invalid grid refinement options");
  for (const auto& [lo, hi] : box)
    if (!(lo <= hi)) throw ValidationError("box interval is empty");

  std::vector<std::pair<double, double>> window = box;
  BoxMinimum best{0.0, {}};
  bool have_best = false;
  std::vector<double> x(dim);
  std::vector<unsigned> counter(dim, 0);
  const unsigned k = opts.points_per_dim;

  for (unsigned round = 0; round < opts.rounds; ++round) {
    std::fill(counter.begin(), counter.end(), 0u);
    while (true) {
      for (std::size_t i = 0; i < dim; ++i) {
        const auto& [lo, hi] = window[i];
        x[i] = lo + (hi - lo) * counter[i] / (k - 1);
      }
      const double v = f(static_cast<const std::vector<double>&>(x));
      if (!have_best || v < best.value) {
        best = {v, x};
        have_best = true;
      }
      std::size_t i = 0;
      while (i < dim && ++counter[i] == k) counter[i++] = 0;
      if (i == dim) break;
    }
    // shrink the window around the incumbent, clamped to the original box
    for (std::size_t i = 0; i < dim; ++i) {
      const double half = (window[i].second - window[i].first) / (2.0 * opts.shrink);
      window[i].first = std::max(box[i].first, best.point[i] - half);
      window[i].second = std::min(box[i].second, best.point[i] + half);
    }
  }
  return best;
}

}  // namespace credalkit
