#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "credalkit/belief.hpp"
#include "credalkit/credal.hpp"
#include "credalkit/errors.hpp"
#include "credalkit/rational.hpp"

namespace credalkit {

namespace detail {

// Solves A x = b exactly by Gaussian elimination. Returns nullopt unless the
// system has a unique solution (full column rank and consistent).
inline std::optional<std::vector<Rational>> solve_unique(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_row(cols);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pr = rank;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) return std::nullopt;  // rank-deficient column
    std::swap(a[pr], a[rank]);
    std::swap(b[pr], b[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational factor = a[r][c] / a[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= factor * a[rank][cc];
      b[r] -= factor * b[rank];
    }
    pivot_row[c] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;  // inconsistent
  std::vector<Rational> x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]] / a[pivot_row[c]][c];
  return x;
}

}  // namespace detail

/// Extreme points of the dominating credal set {P : P(A) >= Bel(A) for all A}
/// of a belief function, by the permutation-allocation scheme: for each atom
/// order, every focal mass is allocated to its earliest atom. Valid precisely
/// because the input is monotone of order infinity.
///
/// Throws NotABeliefFunction when the capacity's Moebius vector has negative
/// entries, and ScaleLimit beyond 8 atoms (the scheme enumerates n! orders).
inline VertexPolytope dominating_polytope(const Capacity& c) {
  const Frame& frame = c.frame();
  if (frame.size() > 8)
    throw ScaleLimit("dominating polytope enumeration limited to 8 atoms");
  const MassFunction mass = mobius_from_capacity(c).to_mass();

  std::vector<std::size_t> order(frame.size());
  std::iota(order.begin(), order.end(), 0);
  std::set<std::vector<Rational>> seen;
  std::vector<std::size_t> rank(frame.size());
  do {
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    std::vector<Rational> p(frame.size(), Rational(0));
    for (const auto& [bits, v] : mass.focal()) {
      std::size_t best = 0;
      std::size_t best_rank = frame.size();
      for (std::uint32_t rest = bits; rest; rest &= rest - 1) {
        const std::size_t atom = std::countr_zero(rest);
        if (rank[atom] < best_rank) {
          best_rank = rank[atom];
          best = atom;
        }
      }
      p[best] += v;
    }
    seen.insert(std::move(p));
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<Distribution> vertices;
  for (const auto& p : seen) vertices.emplace_back(frame, p);
  return VertexPolytope(frame, std::move(vertices));
}

/// Exact convex-hull membership, decided by searching basic solutions: by
/// Caratheodory, a member of the hull is a convex combination of at most n
/// affinely independent vertices. Bounded to 16 vertices and 16 atoms.
inline bool hull_contains(const VertexPolytope& poly, const Distribution& p) {
  if (poly.frame() != p.frame())
    throw ValidationError("distribution belongs to a different frame");
  const std::size_t n = poly.frame().size();
  const auto& verts = poly.vertices();
  if (verts.size() > 16 || n > 16)
    throw ScaleLimit("hull membership limited to 16 vertices and 16 atoms");

  for (const auto& v : verts)
    if (v == p) return true;

  const std::size_t max_support = std::min(verts.size(), n);
  std::vector<std::size_t> idx;
  // subsets of vertices in increasing size; weights solved exactly
  for (std::size_t k = 2; k <= max_support; ++k) {
    idx.assign(k, 0);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(k));
      std::vector<Rational> b(n + 1);
      for (std::size_t col = 0; col < k; ++col) {
        const auto& probs = verts[idx[col]].probs();
        for (std::size_t row = 0; row < n; ++row) a[row][col] = probs[row];
        a[n][col] = 1;
      }
      for (std::size_t row = 0; row < n; ++row) b[row] = p.probs()[row];
      b[n] = 1;
      if (auto weights = detail::solve_unique(std::move(a), std::move(b))) {
        bool nonneg = true;
        for (const auto& w : *weights)
          if (w < 0) {
            nonneg = false;
            break;
          }
        if (nonneg) return true;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == verts.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

/// Brute-force extreme points of {P : P(A) >= lower(A) for all A} for an
/// arbitrary capacity: intersect every choice of n-1 bound constraints with
/// the normalization hyperplane and keep the feasible basic solutions.
/// Exponential; limited to 5 atoms.
inline VertexPolytope enumerate_envelope_vertices(const Capacity& c) {
  const Frame& frame = c.frame();
  const std::size_t n = frame.size();
  if (n > 5) throw ScaleLimit("envelope vertex enumeration limited to 5 atoms");

  std::vector<std::uint32_t> constraints;  // proper nonempty events
  for (std::uint32_t s = 1; s < frame.full_mask(); ++s) constraints.push_back(s);

  auto feasible = [&](const std::vector<Rational>& p) {
    for (const auto& v : p)
      if (v < 0) return false;
    for (std::uint32_t s : constraints) {
      Rational total = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (s & (1u << i)) total += p[i];
      if (total < c.lower(s)) return false;
    }
    return true;
  };

  std::set<std::vector<Rational>> seen;
  if (n == 1) {
    seen.insert({Rational(1)});
  } else {
    const std::size_t k = n - 1;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
      std::vector<Rational> b(n);
      for (std::size_t row = 0; row < k; ++row) {
        const std::uint32_t s = constraints[idx[row]];
        for (std::size_t col = 0; col < n; ++col)
          a[row][col] = (s & (1u << col)) ? 1 : 0;
        b[row] = c.lower(s);
      }
      for (std::size_t col = 0; col < n; ++col) a[k][col] = 1;
      b[k] = 1;
      if (auto p = detail::solve_unique(std::move(a), std::move(b)))
        if (feasible(*p)) seen.insert(std::move(*p));
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == constraints.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::vector<Distribution> vertices;
  for (const auto& p : seen) vertices.emplace_back(frame, p);
  return VertexPolytope(frame, std::move(vertices));
}

}  // namespace credalkit
