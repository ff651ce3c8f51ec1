#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "config.hpp"
#include "graph.hpp"
#include "report.hpp"
#include "spectrum.hpp"

namespace ng {

/// Spectra of G and its complement, computed once and shared by checkers.
struct SpectralPair {
  std::size_t n;
  Spectrum graph;
  Spectrum complement;
};

SpectralPair spectral_pair(const Graph& g);

// Every checker has a Graph overload (computes the pair) and a SpectralPair
// overload. Preconditions on the shape of the parameter (s >= 2 etc.) throw
// ErrorCode::invalid_argument; the applicability conditions of each
// inequality are reported, not thrown.

std::vector<BoundReport> check_nosal(const SpectralPair& sp, double tol = kDefaultTol);
BoundReport check_csikvari_terpai(const SpectralPair& sp, double tol = kDefaultTol);

// Top family, s >= 2, applicable iff n >= 3s - 2 (top_pair_abs: n >= 15(s-1)).
BoundReport check_sum_squares_top(const SpectralPair& sp, long long s, double tol = kDefaultTol);
BoundReport check_abs_sum_top(const SpectralPair& sp, long long s, double tol = kDefaultTol);
BoundReport check_pair_top(const SpectralPair& sp, long long s, double tol = kDefaultTol);
BoundReport check_fs_upper(const SpectralPair& sp, long long s, double tol = kDefaultTol);

// Bottom family, s >= 1. Sums are applicable iff n > 2s; the pair of squares
// iff n > 4^s; the absolute pair iff n >= 4^s. At n = 4^s both pair reports
// carry a boundary note.
BoundReport check_sum_squares_bottom(const SpectralPair& sp, long long s, double tol = kDefaultTol);
BoundReport check_abs_sum_bottom(const SpectralPair& sp, long long s, double tol = kDefaultTol);
BoundReport check_pair_bottom(const SpectralPair& sp, long long s, double tol = kDefaultTol);
BoundReport check_fns_upper(const SpectralPair& sp, long long s, double tol = kDefaultTol);

/// X must be a duplicate-free subset of {2..n}; may be empty.
BoundReport check_partial_square_sum(const SpectralPair& sp, std::span<const std::size_t> x, double tol = kDefaultTol);

/// 2 <= s <= n. Applicable iff mu_s(G) <= tol.
BoundReport check_nonpositive_eigenvalue(const SpectralPair& sp, long long s, double tol = kDefaultTol);

/// k >= 0. Applicable iff k >= 1 and n >= 4^k. The report has lhs = 0 and
/// rhs = slack of the better disjunct, where a disjunct's slack is the
/// smaller of its two (bound - eigenvalue) gaps.
BoundReport check_ramsey_sign(const SpectralPair& sp, long long k, double tol = kDefaultTol);

/// 2 <= k <= n. Returns {weyl_upper, weyl_lower}.
std::vector<BoundReport> check_weyl_pair(const SpectralPair& sp, long long k, double tol = kDefaultTol);

/// Every checker for all valid parameters: s (or k) up to s_max for the
/// parameterised families, X = {2..n}, and Weyl pairs for every k in 2..n.
/// Ordered by (bound id, parameter).
std::vector<BoundReport> run_battery(const SpectralPair& sp, long long s_max, double tol = kDefaultTol);

// Graph convenience overloads.
std::vector<BoundReport> check_nosal(const Graph& g, double tol = kDefaultTol);
BoundReport check_csikvari_terpai(const Graph& g, double tol = kDefaultTol);
BoundReport check_sum_squares_top(const Graph& g, long long s, double tol = kDefaultTol);
BoundReport check_abs_sum_top(const Graph& g, long long s, double tol = kDefaultTol);
BoundReport check_pair_top(const Graph& g, long long s, double tol = kDefaultTol);
BoundReport check_fs_upper(const Graph& g, long long s, double tol = kDefaultTol);
BoundReport check_sum_squares_bottom(const Graph& g, long long s, double tol = kDefaultTol);
BoundReport check_abs_sum_bottom(const Graph& g, long long s, double tol = kDefaultTol);
BoundReport check_pair_bottom(const Graph& g, long long s, double tol = kDefaultTol);
BoundReport check_fns_upper(const Graph& g, long long s, double tol = kDefaultTol);
BoundReport check_partial_square_sum(const Graph& g, std::span<const std::size_t> x, double tol = kDefaultTol);
BoundReport check_nonpositive_eigenvalue(const Graph& g, long long s, double tol = kDefaultTol);
BoundReport check_ramsey_sign(const Graph& g, long long k, double tol = kDefaultTol);
std::vector<BoundReport> check_weyl_pair(const Graph& g, long long k, double tol = kDefaultTol);
std::vector<BoundReport> run_battery(const Graph& g, long long s_max, double tol = kDefaultTol);

/// 4^e, saturating at SIZE_MAX.
std::size_t pow4(long long e);

enum class RamseyKind { clique, independent_set };

struct RamseyCertificate {
  bool found = false;
  RamseyKind kind = RamseyKind::clique;
  std::vector<std::size_t> vertices;  // 1-based, ascending
  bool precondition_met = false;      // n >= 4^k
};

inline constexpr std::size_t kRamseyMaxSetSize = 12;

/// Exhaustive backtracking for a (k+1)-clique, then a (k+1)-independent set.
/// Guaranteed to succeed when n >= 4^k; otherwise failure is reported via
/// found = false. Requires k >= 1 and k + 1 <= kRamseyMaxSetSize.
RamseyCertificate ramsey_certificate(const Graph& g, long long k);

}  // namespace ng
