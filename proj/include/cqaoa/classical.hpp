#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqaoa/errors.hpp"
#include "cqaoa/graph.hpp"
#include "cqaoa/problem.hpp"
#include "cqaoa/rng.hpp"

namespace cqaoa {

struct CoverResult {
  std::vector<int> cover;  // ascending vertex list
  std::size_t size = 0;
  bool is_valid = false;
};

inline std::uint64_t cover_mask(const std::vector<int>& cover) {
  std::uint64_t m = 0;
  for (int v : cover) m |= std::uint64_t{1} << v;
  return m;
}

/// Gavril's 2-approximation: scan the edges in a seeded-random order,
/// greedily build a maximal matching, and take both endpoints of every
/// matched edge. Always a valid cover of at most twice the optimal size.
inline CoverResult gavril_2approx(const Graph& g, std::uint64_t order_seed) {
  std::vector<std::pair<int, int>> edges = g.edges();
  std::mt19937_64 rng(splitmix64(order_seed));
  std::shuffle(edges.begin(), edges.end(), rng);

  std::vector<std::uint8_t> matched(g.n_vertices(), 0);
  std::vector<int> cover;
  for (const auto& [u, v] : edges) {
    if (!matched[u] && !matched[v]) {
      matched[u] = matched[v] = 1;
      cover.push_back(u);
      cover.push_back(v);
    }
  }
  std::sort(cover.begin(), cover.end());
  CoverResult res;
  res.size = cover.size();
  res.is_valid = vc_validate(g, cover_mask(cover));
  res.cover = std::move(cover);
  return res;
}

namespace detail {

// Greedy maximal matching on the remaining adjacency; every matched edge
// needs at least one cover vertex, so the matching size lower-bounds the
// cover size.
inline int matching_lower_bound(const std::vector<std::uint64_t>& adj) {
  const int n = static_cast<int>(adj.size());
  std::uint64_t used = 0;
  int count = 0;
  for (int u = 0; u < n; ++u) {
    if ((used >> u) & 1) continue;
    const std::uint64_t free_nbrs = adj[u] & ~used;
    if (free_nbrs == 0) continue;
    const int v = std::countr_zero(free_nbrs);
    used |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    ++count;
  }
  return count;
}

inline void min_cover_dfs(std::vector<std::uint64_t> adj, std::uint64_t chosen,
                          int chosen_count, std::uint64_t& best_mask,
                          int& best_count) {
  const int n = static_cast<int>(adj.size());
  if (chosen_count + matching_lower_bound(adj) >= best_count) return;

  int pivot = -1, max_deg = 0;
  for (int u = 0; u < n; ++u) {
    const int deg = std::popcount(adj[u]);
    if (deg > max_deg) {
      max_deg = deg;
      pivot = u;
    }
  }
  if (pivot < 0) {  // no edges left: a cover
    best_mask = chosen;
    best_count = chosen_count;
    return;
  }

  const std::uint64_t nbrs = adj[pivot] & ~(std::uint64_t{1} << pivot);

  // branch 1: pivot in the cover
  {
    std::vector<std::uint64_t> next = adj;
    for (int u = 0; u < n; ++u) next[u] &= ~(std::uint64_t{1} << pivot);
    next[pivot] = 0;
    min_cover_dfs(std::move(next), chosen | (std::uint64_t{1} << pivot),
                  chosen_count + 1, best_mask, best_count);
  }
  // branch 2: pivot excluded, so all its neighbours are in the cover
  {
    std::vector<std::uint64_t> next = adj;
    std::uint64_t picked = chosen;
    int picked_count = chosen_count;
    for (std::uint64_t rest = nbrs; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      for (int u = 0; u < n; ++u) next[u] &= ~(std::uint64_t{1} << v);
      next[v] = 0;
      picked |= std::uint64_t{1} << v;
      ++picked_count;
    }
    if (picked_count < best_count)
      min_cover_dfs(std::move(next), picked, picked_count, best_mask,
                    best_count);
  }
}

}  // namespace detail

/// Exact minimum vertex cover by branch-and-bound on the highest-degree
/// vertex with a matching lower bound. Deterministic.
inline CoverResult exact_min_vertex_cover(const Graph& g,
                                          int cap = kDefaultBitCap) {
  const int n = g.n_vertices();
  if (n > cap)
    throw capacity_error("exact_min_vertex_cover: " + std::to_string(n) +
                         " vertices exceeds cap " + std::to_string(cap));
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  std::uint64_t best_mask = n >= 64 ? ~0ULL : (std::uint64_t{1} << n) - 1;
  int best_count = n + 1;
  detail::min_cover_dfs(std::move(adj), 0, 0, best_mask, best_count);

  CoverResult res;
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1) res.cover.push_back(v);
  res.size = res.cover.size();
  res.is_valid = vc_validate(g, best_mask);
  return res;
}

/// optimal_size / approx_size in (0, 1]; 1.0 when both are zero (edgeless
/// graph). Rejects approx_size < optimal_size, which signals a broken
/// solver.
inline double approximation_quality(std::size_t optimal_size,
                                    std::size_t approx_size) {
  if (approx_size < optimal_size)
    throw std::invalid_argument(
        "approximation_quality: approximate cover smaller than optimal");
  if (approx_size == 0) return 1.0;
  return static_cast<double>(optimal_size) / static_cast<double>(approx_size);
}

}  // namespace cqaoa
