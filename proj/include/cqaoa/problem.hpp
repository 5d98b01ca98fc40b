#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cqaoa/errors.hpp"
#include "cqaoa/graph.hpp"

namespace cqaoa {

inline constexpr int kDefaultBitCap = 24;

/// A polynomially-bounded NP optimisation problem, reduced to its oracle
/// form: an n-bit solution encoding, a feasibility predicate, an integer
/// measure to maximise, a bound on that measure, and one known feasible
/// solution to start the walk from.
///
/// Implementations must be pure and thread-safe; measure() must return
/// values in [0, measure_max()] for every feasible bitstring.
class NpoInstance {
 public:
  virtual ~NpoInstance() = default;
  virtual int n_bits() const = 0;
  virtual bool validate(std::uint64_t x) const = 0;
  virtual std::uint64_t measure(std::uint64_t x) const = 0;
  virtual std::uint64_t measure_max() const = 0;
  virtual std::uint64_t initial_feasible() const = 0;
};

/// True iff every edge of `g` has at least one endpoint whose bit is set
/// in `x`.
inline bool vc_validate(const Graph& g, std::uint64_t x) {
  for (const auto& [u, v] : g.edges())
    if (((x >> u) & 1) == 0 && ((x >> v) & 1) == 0) return false;
  return true;
}

/// Number of vertices NOT in the cover: n - popcount(x). Total on all
/// bitstrings; meaningful only for valid covers.
inline std::uint64_t vc_measure(const Graph& g, std::uint64_t x) {
  return static_cast<std::uint64_t>(g.n_vertices()) -
         static_cast<std::uint64_t>(std::popcount(x));
}

/// The all-vertices cover, feasible for every graph (and the worst one).
inline std::uint64_t vc_initial(const Graph& g) {
  const int n = g.n_vertices();
  return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

/// Minimum vertex cover as an NpoInstance. Bit i set means vertex i is in
/// the cover; the goal is to maximise the count of uncovered vertices.
class VertexCoverInstance final : public NpoInstance {
 public:
  explicit VertexCoverInstance(Graph g) : graph_(std::move(g)) {}

  const Graph& graph() const noexcept { return graph_; }

  int n_bits() const override { return graph_.n_vertices(); }
  bool validate(std::uint64_t x) const override {
    return vc_validate(graph_, x);
  }
  std::uint64_t measure(std::uint64_t x) const override {
    return vc_measure(graph_, x);
  }
  std::uint64_t measure_max() const override {
    return static_cast<std::uint64_t>(graph_.n_vertices());
  }
  std::uint64_t initial_feasible() const override { return vc_initial(graph_); }

 private:
  Graph graph_;
};

/// Exhaustive oracle tables over all 2^n bitstrings, plus the sorted list
/// of feasible indices. Immutable once built.
struct Tables {
  int n_bits = 0;
  std::uint64_t measure_max = 0;
  std::vector<std::uint8_t> validity;
  std::vector<std::uint32_t> measure;
  std::vector<std::uint64_t> feasible;

  std::uint64_t dim() const noexcept { return std::uint64_t{1} << n_bits; }
};

inline Tables build_tables(const NpoInstance& instance,
                           int bit_cap = kDefaultBitCap) {
  const int n = instance.n_bits();
  if (n < 1) throw std::invalid_argument("build_tables: n_bits must be >= 1");
  if (n > bit_cap)
    throw capacity_error("build_tables: n_bits " + std::to_string(n) +
                         " exceeds simulator cap " + std::to_string(bit_cap));
  Tables t;
  t.n_bits = n;
  t.measure_max = instance.measure_max();
  const std::uint64_t dim = std::uint64_t{1} << n;
  t.validity.resize(dim);
  t.measure.resize(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    const bool ok = instance.validate(x);
    t.validity[x] = ok ? 1 : 0;
    t.measure[x] = static_cast<std::uint32_t>(instance.measure(x));
    if (ok) t.feasible.push_back(x);
  }
  return t;
}

/// True iff the feasible states form a single connected component of the
/// bit-flip hypercube. BFS over the feasible set.
inline bool feasible_connected(const Tables& t) {
  if (t.feasible.empty()) return true;
  std::vector<std::uint8_t> seen(t.dim(), 0);
  std::vector<std::uint64_t> queue;
  queue.push_back(t.feasible.front());
  seen[t.feasible.front()] = 1;
  std::size_t visited = 0;
  while (!queue.empty()) {
    const std::uint64_t x = queue.back();
    queue.pop_back();
    ++visited;
    for (int b = 0; b < t.n_bits; ++b) {
      const std::uint64_t y = x ^ (std::uint64_t{1} << b);
      if (t.validity[y] && !seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return visited == t.feasible.size();
}

}  // namespace cqaoa
