#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <random>

#include "config.hpp"
#include "error.hpp"

namespace ng {
namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

void check_vertex(std::size_t n, std::size_t u) {
  if (u < 1 || u > n) {
    fail(ErrorCode::invalid_argument,
         "vertex " + std::to_string(u) + " out of range 1.." + std::to_string(n));
  }
}

void check_blowup_factor(std::size_t n, std::size_t t) {
  if (t == 0) fail(ErrorCode::invalid_argument, "blow-up factor t must be at least 1");
  if (n > max_order() / t) require_within_cap(max_order() + 1, "blow-up");
  require_within_cap(n * t, "blow-up");
}

Graph blowup(const Graph& g, std::size_t t, bool clique_blocks) {
  check_blowup_factor(g.order(), t);
  const std::size_t n = g.order();
  GraphBuilder b(n * t);
  for (std::size_t u = 1; u <= n; ++u) {
    const std::size_t base_u = (u - 1) * t;
    if (clique_blocks) {
      for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = i + 1; j <= t; ++j) b.add_edge(base_u + i, base_u + j);
    }
    for (std::size_t v = u + 1; v <= n; ++v) {
      if (!g.adjacent(u, v)) continue;
      const std::size_t base_v = (v - 1) * t;
      for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = 1; j <= t; ++j) b.add_edge(base_u + i, base_v + j);
    }
  }
  return std::move(b).build();
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::invalid_argument,
         "invalid " + std::string(what) + " '" + std::string(s) + "' in generator spec");
  }
  return v;
}

double parse_probability(std::string_view s) {
  std::string buf(s);
  char* end = nullptr;
  double p = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    fail(ErrorCode::invalid_argument, "invalid edge probability '" + buf + "'");
  }
  return p;
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "graph order must be positive");
  require_within_cap(n, "graph");
  bits_.assign((pair_count(n) + 63) / 64, 0);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) return false;
  return bit(pair_index(u, v));
}

std::size_t Graph::degree(std::size_t u) const {
  check_vertex(n_, u);
  std::size_t d = 0;
  for (std::size_t v = 1; v <= n_; ++v)
    if (v != u && bit(pair_index(u, v))) ++d;
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (std::size_t v = 2; v <= n_; ++v)
    for (std::size_t u = 1; u < v; ++u)
      if (bit(pair_index(u, v))) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

GraphBuilder& GraphBuilder::set(std::size_t u, std::size_t v, bool present) {
  check_vertex(g_.n_, u);
  check_vertex(g_.n_, v);
  if (u == v) fail(ErrorCode::invalid_argument, "self-loops are not allowed");
  const std::size_t idx = Graph::pair_index(u, v);
  const std::uint64_t mask = std::uint64_t{1} << (idx & 63);
  std::uint64_t& word = g_.bits_[idx >> 6];
  const bool had = (word & mask) != 0;
  if (had == present) return *this;
  word ^= mask;
  if (present) {
    ++g_.edges_;
  } else {
    --g_.edges_;
  }
  return *this;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (std::size_t v = 2; v <= n; ++v)
    for (std::size_t u = 1; u < v; ++u)
      if (!g.bit(Graph::pair_index(u, v))) b.add_edge(u, v);
  return std::move(b).build();
}

Graph blowup_independent(const Graph& g, std::size_t t) { return blowup(g, t, false); }

Graph blowup_clique(const Graph& g, std::size_t t) { return blowup(g, t, true); }

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  if (vertices.empty()) fail(ErrorCode::invalid_argument, "induced subgraph needs a nonempty vertex set");
  std::vector<bool> seen(g.order() + 1, false);
  for (std::size_t u : vertices) {
    check_vertex(g.order(), u);
    if (seen[u]) fail(ErrorCode::invalid_argument, "duplicate vertex " + std::to_string(u));
    seen[u] = true;
  }
  GraphBuilder b(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i + 1, j + 1);
  return std::move(b).build();
}

Graph generate(const GeneratorSpec& spec) {
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case GeneratorKind::complete:
      return complement(Graph(n));
    case GeneratorKind::empty:
      return Graph(n);
    case GeneratorKind::path: {
      GraphBuilder b(n);
      for (std::size_t u = 1; u < n; ++u) b.add_edge(u, u + 1);
      return std::move(b).build();
    }
    case GeneratorKind::cycle: {
      if (n < 3) fail(ErrorCode::invalid_argument, "cycle needs at least 3 vertices");
      GraphBuilder b(n);
      for (std::size_t u = 1; u < n; ++u) b.add_edge(u, u + 1);
      b.add_edge(n, 1);
      return std::move(b).build();
    }
    case GeneratorKind::complete_bipartite: {
      const std::size_t a = spec.n, c = spec.m;
      if (a == 0 || c == 0) fail(ErrorCode::invalid_argument, "complete_bipartite needs two positive part sizes");
      require_within_cap(a + c, "complete_bipartite");
      GraphBuilder b(a + c);
      for (std::size_t u = 1; u <= a; ++u)
        for (std::size_t v = a + 1; v <= a + c; ++v) b.add_edge(u, v);
      return std::move(b).build();
    }
    case GeneratorKind::erdos_renyi: {
      if (!(spec.p >= 0.0 && spec.p <= 1.0))
        fail(ErrorCode::invalid_argument, "edge probability must lie in [0, 1]");
      if (!spec.seed) fail(ErrorCode::invalid_argument, "erdos_renyi requires a seed");
      std::mt19937_64 rng(*spec.seed);
      GraphBuilder b(n);
      for (std::size_t v = 2; v <= n; ++v)
        for (std::size_t u = 1; u < v; ++u)
          if (unit_interval(rng()) < spec.p) b.add_edge(u, v);
      return std::move(b).build();
    }
  }
  fail(ErrorCode::internal, "unknown generator kind");
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::complete: return "complete";
    case GeneratorKind::empty: return "empty";
    case GeneratorKind::path: return "path";
    case GeneratorKind::cycle: return "cycle";
    case GeneratorKind::complete_bipartite: return "complete_bipartite";
    case GeneratorKind::erdos_renyi: return "erdos_renyi";
  }
  return "unknown";
}

GeneratorSpec parse_generator_spec(std::string_view text, std::optional<std::uint64_t> default_seed) {
  auto parts = split(text, ':');
  const std::string_view name = parts.front();
  GeneratorSpec spec;
  spec.seed = default_seed;
  auto expect_args = [&](std::size_t lo, std::size_t hi) {
    const std::size_t got = parts.size() - 1;
    if (got < lo || got > hi) {
      fail(ErrorCode::invalid_argument, "generator '" + std::string(name) + "' takes " +
                                            std::to_string(lo) +
                                            (lo == hi ? "" : ".." + std::to_string(hi)) +
                                            " argument(s), got " + std::to_string(got));
    }
  };
  if (name == "complete" || name == "empty" || name == "path" || name == "cycle") {
    expect_args(1, 1);
    spec.kind = name == "complete" ? GeneratorKind::complete
                : name == "empty"  ? GeneratorKind::empty
                : name == "path"   ? GeneratorKind::path
                                   : GeneratorKind::cycle;
    spec.n = parse_uint(parts[1], "order");
  } else if (name == "complete_bipartite") {
    expect_args(2, 2);
    spec.kind = GeneratorKind::complete_bipartite;
    spec.n = parse_uint(parts[1], "part size");
    spec.m = parse_uint(parts[2], "part size");
  } else if (name == "erdos_renyi") {
    expect_args(2, 3);
    spec.kind = GeneratorKind::erdos_renyi;
    spec.n = parse_uint(parts[1], "order");
    spec.p = parse_probability(parts[2]);
    if (parts.size() == 4) spec.seed = parse_uint(parts[3], "seed");
  } else {
    fail(ErrorCode::invalid_argument, "unknown generator '" + std::string(name) + "'");
  }
  return spec;
}

}  // namespace ng
