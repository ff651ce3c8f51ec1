#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "graph.hpp"

namespace ng {

/// top: |mu_s(G)| + |mu_s(complement)|;
/// bottom: |mu_{n-s+1}(G)| + |mu_{n-s+1}(complement)|.
enum class Family { top, bottom };
enum class Method { exhaustive, local_search };

std::string_view to_string(Family f);
std::string_view to_string(Method m);
Family parse_family(std::string_view text);

struct ExtremalRecord {
  std::size_t n = 0;
  std::size_t s = 0;
  Family family = Family::top;
  double value = 0.0;
  std::string witness;  // graph6
  Method method = Method::exhaustive;
  bool exact = false;
  std::uint64_t evaluations = 0;
  std::optional<std::uint64_t> seed;
};

double objective(const Graph& g, std::size_t s, Family family);

inline constexpr std::size_t kExhaustiveCap = 7;
inline constexpr std::size_t kExhaustiveOverrideCap = 8;

struct ExhaustiveOptions {
  bool allow_override = false;  // lifts the cap from 7 to 8
  unsigned threads = 0;         // 0: hardware concurrency
  double tol = kDefaultTol;
};

/// Enumerates every labelled graph on n vertices, scoring each {G, complement}
/// pair once. The witness is the lexicographically smallest graph6 string
/// among all graphs whose objective is within tol of the maximum.
ExtremalRecord exhaustive_f(std::size_t n, std::size_t s, Family family, const ExhaustiveOptions& opts = {});

struct LocalSearchOptions {
  std::uint64_t seed = 0;
  std::size_t iterations = 100;  // max ascent steps per start
  std::size_t restarts = 4;      // random starts; restart r uses seed + r
  unsigned threads = 0;
};

/// Steepest ascent over single-edge flips from seeded Erdos-Renyi(1/2)
/// starts, plus the extremal_graph(k, t) start whenever n = 2^{k+1} t and
/// s = 2^{k-1} + 1. The value is re-scored from the parsed witness.
ExtremalRecord local_search_f(std::size_t n, std::size_t s, Family family, const LocalSearchOptions& opts);

/// The (k, t) with 2^{k+1} t = n and 2^{k-1} + 1 = s, if any.
std::optional<std::pair<std::size_t, std::size_t>> constructive_start(std::size_t n, std::size_t s);

/// 1/sqrt(2(s-1)) for top, 1/sqrt(2s) for bottom.
double target_constant(std::size_t s, Family family);

struct RatioRow {
  std::size_t n = 0;
  double value = 0.0;
  double ratio = 0.0;   // value / n
  double target = 0.0;
  double gap = 0.0;     // target - ratio
  Method method = Method::exhaustive;
  std::string witness;
};

/// Exhaustive for n <= 7 (8 with override), local search otherwise.
std::vector<RatioRow> ratio_table(std::size_t s, Family family, std::span<const std::size_t> orders,
                                  const LocalSearchOptions& local, const ExhaustiveOptions& exact = {});

}  // namespace ng
