#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "constructions.hpp"
#include "eigen.hpp"
#include "error.hpp"
#include "graph6.hpp"
#include "spectrum.hpp"

namespace ng {
namespace {

// Strict improvement threshold for an ascent step; keeps plateaus of
// numerically equal scores from cycling.
constexpr double kAscentEps = 1e-10;

void validate_index(std::size_t n, std::size_t s, Family family) {
  const std::size_t lo = family == Family::top ? 2 : 1;
  if (s < lo || s > n) {
    fail(ErrorCode::invalid_argument, "family " + std::string(to_string(family)) + " needs " + std::to_string(lo) +
                                          " <= s <= n, got s = " + std::to_string(s) + ", n = " + std::to_string(n));
  }
}

std::size_t eigen_slot(std::size_t n, std::size_t s, Family family) {
  return family == Family::top ? s - 1 : n - s;
}

double score_matrices(const SymmetricMatrix& g, const SymmetricMatrix& c, std::size_t slot) {
  const auto eg = symmetric_eigenvalues(g);
  const auto ec = symmetric_eigenvalues(c);
  return std::fabs(eg[slot]) + std::fabs(ec[slot]);
}

unsigned resolve_threads(unsigned requested, std::size_t work) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(1, work)));
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = resolve_threads(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t v = 2; v <= n; ++v)
    for (std::size_t u = 1; u < v; ++u, ++k)
      if ((mask >> k) & 1u) b.add_edge(u, v);
  return std::move(b).build();
}

struct Candidate {
  double value;
  std::uint64_t mask;
};

struct ShardResult {
  double best = -1.0;
  std::vector<Candidate> near_best;  // every visited mask within tol of best
  std::uint64_t visited = 0;
};

std::string best_witness(const std::vector<Candidate>& candidates, std::size_t n, std::uint64_t full) {
  std::string best;
  for (const auto& c : candidates) {
    for (std::uint64_t m : {c.mask, full ^ c.mask}) {
      std::string g6 = emit_graph6(graph_from_mask(n, m));
      if (best.empty() || g6 < best) best = std::move(g6);
    }
  }
  return best;
}

struct Climb {
  double value = -1.0;
  std::string witness;
  std::uint64_t evaluations = 0;
};

Climb hill_climb(const Graph& start, std::size_t s, Family family, std::size_t iterations) {
  const std::size_t n = start.order();
  const std::size_t slot = eigen_slot(n, s, family);
  SymmetricMatrix g = adjacency_matrix(start);
  SymmetricMatrix c = adjacency_matrix(complement(start));
  Climb out;
  double current = score_matrices(g, c, slot);
  out.evaluations = 1;

  auto flip = [&](std::size_t i, std::size_t j) {
    const double was = g(i, j);
    g.set(i, j, 1.0 - was);
    c.set(i, j, was);
  };

  for (std::size_t step = 0; step < iterations; ++step) {
    double best = current;
    std::size_t bi = 0, bj = 0;
    bool improved = false;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        flip(i, j);
        const double v = score_matrices(g, c, slot);
        ++out.evaluations;
        flip(i, j);
        if (v > best + kAscentEps) {
          best = v;
          bi = i;
          bj = j;
          improved = true;
        }
      }
    }
    if (!improved) break;
    flip(bi, bj);
    current = best;
  }

  GraphBuilder b(n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (g(i, j) != 0.0) b.add_edge(i + 1, j + 1);
  out.witness = emit_graph6(std::move(b).build());
  out.value = current;
  return out;
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::top ? "top" : "bottom"; }

std::string_view to_string(Method m) { return m == Method::exhaustive ? "exhaustive" : "local_search"; }

Family parse_family(std::string_view text) {
  if (text == "top") return Family::top;
  if (text == "bottom") return Family::bottom;
  fail(ErrorCode::invalid_argument, "family must be 'top' or 'bottom', got '" + std::string(text) + "'");
}

double objective(const Graph& g, std::size_t s, Family family) {
  validate_index(g.order(), s, family);
  const Spectrum sg = adjacency_spectrum(g);
  const Spectrum sc = adjacency_spectrum(complement(g));
  if (family == Family::top) return std::fabs(sg.mu(s)) + std::fabs(sc.mu(s));
  return std::fabs(sg.mu_bottom(s)) + std::fabs(sc.mu_bottom(s));
}

ExtremalRecord exhaustive_f(std::size_t n, std::size_t s, Family family, const ExhaustiveOptions& opts) {
  const std::size_t cap = opts.allow_override ? kExhaustiveOverrideCap : kExhaustiveCap;
  if (n > cap) {
    fail(ErrorCode::size_cap, "exhaustive search is capped at n <= " + std::to_string(cap) +
                                  (opts.allow_override ? "" : " (override allows n = 8)") + ", got n = " +
                                  std::to_string(n));
  }
  if (n == 0) fail(ErrorCode::invalid_argument, "graph order must be positive");
  validate_index(n, s, family);

  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  const std::uint64_t full = total - 1;
  const std::size_t slot = eigen_slot(n, s, family);

  const std::size_t shard_count = static_cast<std::size_t>(std::min<std::uint64_t>(total, 256));
  std::vector<ShardResult> shards(shard_count);

  parallel_for(shard_count, opts.threads, [&](std::size_t idx) {
    const std::uint64_t lo = total * idx / shard_count;
    const std::uint64_t hi = total * (idx + 1) / shard_count;
    ShardResult& res = shards[idx];
    SymmetricMatrix g(n), c(n);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      if ((full ^ mask) < mask) continue;
      std::size_t k = 0;
      for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
          const bool e = (mask >> k) & 1u;
          g.set(i, j, e ? 1.0 : 0.0);
          c.set(i, j, e ? 0.0 : 1.0);
        }
      }
      const double v = score_matrices(g, c, slot);
      ++res.visited;
      if (v > res.best) {
        res.best = v;
        std::erase_if(res.near_best, [&](const Candidate& x) { return x.value < v - opts.tol; });
      }
      if (v >= res.best - opts.tol) res.near_best.push_back({v, mask});
    }
  });

  double best = -1.0;
  std::uint64_t visited = 0;
  for (const auto& sh : shards) {
    best = std::max(best, sh.best);
    visited += sh.visited;
  }
  std::vector<Candidate> winners;
  for (const auto& sh : shards)
    for (const auto& cnd : sh.near_best)
      if (cnd.value >= best - opts.tol) winners.push_back(cnd);

  ExtremalRecord rec;
  rec.n = n;
  rec.s = s;
  rec.family = family;
  rec.value = best;
  rec.witness = best_witness(winners, n, full);
  rec.method = Method::exhaustive;
  rec.exact = true;
  rec.evaluations = visited;
  return rec;
}

std::optional<std::pair<std::size_t, std::size_t>> constructive_start(std::size_t n, std::size_t s) {
  for (std::size_t k = 1; k < 62; ++k) {
    const std::size_t blocks = std::size_t{1} << (k + 1);
    if (blocks > n) break;
    if ((std::size_t{1} << (k - 1)) + 1 == s && n % blocks == 0) return std::make_pair(k, n / blocks);
  }
  return std::nullopt;
}

ExtremalRecord local_search_f(std::size_t n, std::size_t s, Family family, const LocalSearchOptions& opts) {
  if (n == 0) fail(ErrorCode::invalid_argument, "graph order must be positive");
  require_within_cap(n, "local search");
  validate_index(n, s, family);
  if (opts.iterations == 0 || opts.restarts == 0) {
    fail(ErrorCode::invalid_argument, "iterations and restarts must be at least 1");
  }

  std::vector<Graph> starts;
  const auto constructive = constructive_start(n, s);
  if (constructive) starts.push_back(extremal_graph(constructive->first, constructive->second));
  for (std::size_t r = 0; r < opts.restarts; ++r) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::erdos_renyi;
    spec.n = n;
    spec.p = 0.5;
    spec.seed = opts.seed + r;
    starts.push_back(generate(spec));
  }

  std::vector<Climb> climbs(starts.size());
  parallel_for(starts.size(), opts.threads,
               [&](std::size_t i) { climbs[i] = hill_climb(starts[i], s, family, opts.iterations); });

  std::uint64_t evaluations = 0;
  const Climb* best = nullptr;
  for (const auto& c : climbs) {
    evaluations += c.evaluations;
    if (best == nullptr || c.value > best->value + kDefaultTol ||
        (c.value >= best->value - kDefaultTol && c.witness < best->witness)) {
      best = &c;
    }
  }

  ExtremalRecord rec;
  rec.n = n;
  rec.s = s;
  rec.family = family;
  rec.witness = best->witness;
  rec.value = objective(parse_graph6(rec.witness), s, family);
  rec.method = Method::local_search;
  rec.exact = false;
  rec.evaluations = evaluations;
  rec.seed = opts.seed;
  return rec;
}

double target_constant(std::size_t s, Family family) {
  if (family == Family::top) {
    if (s < 2) fail(ErrorCode::invalid_argument, "top family needs s >= 2");
    return 1.0 / std::sqrt(2.0 * static_cast<double>(s - 1));
  }
  if (s < 1) fail(ErrorCode::invalid_argument, "bottom family needs s >= 1");
  return 1.0 / std::sqrt(2.0 * static_cast<double>(s));
}

std::vector<RatioRow> ratio_table(std::size_t s, Family family, std::span<const std::size_t> orders,
                                  const LocalSearchOptions& local, const ExhaustiveOptions& exact) {
  const double target = target_constant(s, family);
  const std::size_t exact_cap = exact.allow_override ? kExhaustiveOverrideCap : kExhaustiveCap;
  std::vector<RatioRow> rows;
  for (std::size_t n : orders) {
    const ExtremalRecord rec =
        n <= exact_cap ? exhaustive_f(n, s, family, exact) : local_search_f(n, s, family, local);
    RatioRow row;
    row.n = n;
    row.value = rec.value;
    row.ratio = rec.value / static_cast<double>(n);
    row.target = target;
    row.gap = target - row.ratio;
    row.method = rec.method;
    row.witness = rec.witness;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ng
