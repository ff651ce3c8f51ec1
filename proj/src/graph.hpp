#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ng {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 1..n.
///
/// The upper triangle is stored bit-packed in column-major order: the pair
/// (i, j) with 1 <= i < j <= n lives at bit (j-1)(j-2)/2 + (i-1), which is
/// also the order in which graph6 packs its bits. Values are immutable once
/// built; use GraphBuilder to construct one.
class Graph {
 public:
  /// Edgeless graph of order n (n >= 1, within the size cap).
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }

  /// 1-based; adjacent(u, u) is always false.
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t u) const;

  /// Edges as (u, v) with u < v, sorted by (v, u).
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  static std::size_t pair_index(std::size_t u, std::size_t v) noexcept {
    if (u > v) std::swap(u, v);
    return (v - 1) * (v - 2) / 2 + (u - 1);
  }

  bool bit(std::size_t index) const noexcept {
    return (bits_[index >> 6] >> (index & 63)) & 1u;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const noexcept { return g_.n_; }

  GraphBuilder& add_edge(std::size_t u, std::size_t v) { return set(u, v, true); }
  GraphBuilder& set(std::size_t u, std::size_t v, bool present);
  bool adjacent(std::size_t u, std::size_t v) const { return g_.adjacent(u, v); }

  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

Graph complement(const Graph& g);

/// G^(t): vertex u becomes the independent block {(u-1)t+1, ..., ut}.
Graph blowup_independent(const Graph& g, std::size_t t);

/// G^[t]: as blowup_independent but each block is a clique K_t.
Graph blowup_clique(const Graph& g, std::size_t t);

/// Subgraph induced by the 1-based vertex list `vertices`, relabelled 1..|S|
/// in the given order.
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);

enum class GeneratorKind {
  complete,
  empty,
  path,
  cycle,
  complete_bipartite,
  erdos_renyi,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::empty;
  std::size_t n = 1;
  std::size_t m = 0;  // second part size for complete_bipartite
  double p = 0.0;
  std::optional<std::uint64_t> seed;
};

Graph generate(const GeneratorSpec& spec);

/// Parses "kind:arg[:arg...]" as used on the command line, e.g. "cycle:5",
/// "complete_bipartite:3:4", "erdos_renyi:20:0.5[:seed]". A seed in the text
/// takes precedence over `default_seed`.
GeneratorSpec parse_generator_spec(std::string_view text,
                                   std::optional<std::uint64_t> default_seed = std::nullopt);

std::string_view to_string(GeneratorKind kind);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw; portable,
/// unlike std::uniform_real_distribution.
inline double unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace ng
