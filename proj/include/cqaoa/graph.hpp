#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cqaoa/errors.hpp"
#include "cqaoa/rng.hpp"

namespace cqaoa {

/// Undirected simple graph on labelled vertices 0..n-1.
///
/// Edges are stored as (u, v) pairs with u < v, sorted and deduplicated.
/// Vertex i corresponds to bit i of a solution bitstring, bit 0 being the
/// least significant bit. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  Graph(int n_vertices, std::vector<std::pair<int, int>> edges)
      : n_(n_vertices) {
    if (n_vertices < 1)
      throw std::invalid_argument("Graph: vertex count must be positive");
    for (auto& [u, v] : edges) {
      if (u == v) throw std::invalid_argument("Graph: self-loop");
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n_vertices)
        throw std::invalid_argument("Graph: vertex index out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  int n_vertices() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept {
    return edges_;
  }
  std::size_t n_edges() const noexcept { return edges_.size(); }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(),
                              std::make_pair(u, v));
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
      ++deg[u];
      ++deg[v];
    }
    return deg;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// G(n, prob) Erdos-Renyi graph. Each of the n(n-1)/2 candidate edges is
/// included independently with probability `prob`, decided by a
/// counter-based hash of (seed, edge index) so membership does not depend
/// on evaluation order.
inline Graph gen_erdos_renyi(int n, double prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_erdos_renyi: n must be >= 1");
  if (!(prob >= 0.0 && prob <= 1.0))
    throw std::invalid_argument("gen_erdos_renyi: prob must lie in [0, 1]");
  std::vector<std::pair<int, int>> edges;
  std::uint64_t index = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++index)
      if (counter_uniform(seed, index) < prob) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Cycle of n >= 3 vertices: edges (i, i+1 mod n).
inline Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

/// Star of n >= 2 vertices: vertex 0 is the centre, edges (0, i).
inline Graph gen_star(int n) {
  if (n < 2) throw std::invalid_argument("gen_star: n must be >= 2");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, std::move(edges));
}

/// Johnson graph J(n, k): vertices are the k-subsets of {0..n-1} in
/// colexicographic order (ascending subset bitmask); two vertices are
/// adjacent when their subsets intersect in k-1 elements. Regular of
/// degree k(n-k).
inline Graph gen_johnson(int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("gen_johnson: require 1 <= k <= n");
  if (n > 30) throw std::invalid_argument("gen_johnson: n too large");
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) subsets.push_back(m);
  std::vector<std::pair<int, int>> edges;
  const int nv = static_cast<int>(subsets.size());
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (std::popcount(subsets[i] & subsets[j]) == k - 1)
        edges.emplace_back(i, j);
  return Graph(nv, std::move(edges));
}

/// Parse the edge-list text format: first line `n`, then `u v` lines.
/// Rejects malformed lines, out-of-range indices and self-loops with a
/// parse_error naming the offending line.
inline Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    return true;
  };

  if (!next_line()) throw parse_error(1, "missing vertex count");
  int n = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> n) || n < 1) throw parse_error(lineno, "invalid vertex count");
    std::string rest;
    if (ls >> rest) throw parse_error(lineno, "trailing tokens after count");
  }

  std::vector<std::pair<int, int>> edges;
  while (next_line()) {
    std::istringstream ls(line);
    int u = 0, v = 0;
    if (!(ls >> u >> v)) throw parse_error(lineno, "expected 'u v'");
    std::string rest;
    if (ls >> rest) throw parse_error(lineno, "trailing tokens after edge");
    if (u == v) throw parse_error(lineno, "self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error(lineno, "vertex index out of range");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

/// Inverse of read_edge_list: lines sorted by (u, v), LF-terminated.
inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n_vertices()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace cqaoa
