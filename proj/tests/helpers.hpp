#pragma once

#include <cstdint>
#include <vector>

#include "config.hpp"
#include "graph.hpp"
#include "oracles.hpp"

namespace ng::testing {

inline Graph er(std::size_t n, double p, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::erdos_renyi;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  return generate(spec);
}

inline Graph named(GeneratorKind kind, std::size_t n, std::size_t m = 0) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.m = m;
  return generate(spec);
}

inline Dense dense_adjacency(const Graph& g) {
  const std::size_t n = g.order();
  Dense a(n, std::vector<double>(n, 0.0));
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = 1; v <= n; ++v)
      if (g.adjacent(u, v)) a[u - 1][v - 1] = 1.0;
  return a;
}

/// Circulant graph on Z_n joining i and i +- d for each d in `jumps`.
inline Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d : jumps) b.add_edge(i + 1, (i + d) % n + 1);
  return std::move(b).build();
}

/// Restores the global size cap on scope exit.
class CapGuard {
 public:
  explicit CapGuard(std::size_t cap) : saved_(max_order()) { set_max_order(cap); }
  ~CapGuard() { set_max_order(saved_); }

 private:
  std::size_t saved_;
};

}  // namespace ng::testing
