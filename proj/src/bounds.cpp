#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "error.hpp"

namespace ng {

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::nosal_lower: return "nosal_lower";
    case BoundId::nosal_upper: return "nosal_upper";
    case BoundId::csikvari_terpai: return "csikvari_terpai";
    case BoundId::top_sum_squares: return "top_sum_squares";
    case BoundId::top_abs_sum: return "top_abs_sum";
    case BoundId::top_pair_squares: return "top_pair_squares";
    case BoundId::top_pair_abs: return "top_pair_abs";
    case BoundId::bottom_sum_squares: return "bottom_sum_squares";
    case BoundId::bottom_abs_sum: return "bottom_abs_sum";
    case BoundId::bottom_pair_squares: return "bottom_pair_squares";
    case BoundId::bottom_pair_abs: return "bottom_pair_abs";
    case BoundId::partial_square_sum: return "partial_square_sum";
    case BoundId::nonpositive_eigenvalue: return "nonpositive_eigenvalue";
    case BoundId::ramsey_sign: return "ramsey_sign";
    case BoundId::weyl_upper: return "weyl_upper";
    case BoundId::weyl_lower: return "weyl_lower";
    case BoundId::witness_top: return "witness_top";
    case BoundId::witness_bottom: return "witness_bottom";
    case BoundId::witness_top_complement: return "witness_top_complement";
    case BoundId::witness_bottom_complement: return "witness_bottom_complement";
  }
  return "unknown";
}

BoundReport make_report(BoundId id, Strictness strictness, bool applicable, double lhs, double rhs, double tol,
                        std::size_t n, std::optional<long long> param) {
  BoundReport r;
  r.id = id;
  r.applicable = applicable;
  r.strictness = strictness;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.tol = tol;
  r.satisfied = strictness == Strictness::strict ? r.margin > -tol : r.margin >= -tol;
  r.n = n;
  r.param = param;
  return r;
}

std::size_t pow4(long long e) {
  if (e < 0) return 0;
  if (e >= 32) return std::numeric_limits<std::size_t>::max();
  return std::size_t{1} << (2 * e);
}

SpectralPair spectral_pair(const Graph& g) {
  return SpectralPair{g.order(), adjacency_spectrum(g), adjacency_spectrum(complement(g))};
}

namespace {

void require_min(long long v, long long lo, const char* name) {
  if (v < lo) {
    fail(ErrorCode::invalid_argument,
         std::string(name) + " must be at least " + std::to_string(lo) + ", got " + std::to_string(v));
  }
}

double dbl(std::size_t v) { return static_cast<double>(v); }

// Sum of f(mu_i(G)) + f(mu_i(complement)) for i in [lo, hi] clipped to 1..n.
template <class F>
double paired_sum(const SpectralPair& sp, long long lo, long long hi, F f) {
  double acc = 0.0;
  const long long n = static_cast<long long>(sp.n);
  for (long long i = std::max(1LL, lo); i <= std::min(hi, n); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    acc += f(sp.graph.mu(idx)) + f(sp.complement.mu(idx));
  }
  return acc;
}

double square(double x) { return x * x; }
double absval(double x) { return std::fabs(x); }

BoundReport out_of_range(BoundId id, Strictness strictness, double rhs, double tol, std::size_t n, long long s) {
  auto r = make_report(id, strictness, false, 0.0, rhs, tol, n, s);
  r.note = "index exceeds order";
  return r;
}

std::string boundary_note(std::size_t n, long long s) {
  return n == pow4(s) ? "boundary n = 4^s" : "";
}

}  // namespace

std::vector<BoundReport> check_nosal(const SpectralPair& sp, double tol) {
  const double sum = sp.graph.mu(1) + sp.complement.mu(1);
  const double n1 = dbl(sp.n) - 1.0;
  return {make_report(BoundId::nosal_lower, Strictness::non_strict, true, n1, sum, tol, sp.n),
          make_report(BoundId::nosal_upper, Strictness::strict, true, sum, std::sqrt(2.0) * n1, tol, sp.n)};
}

BoundReport check_csikvari_terpai(const SpectralPair& sp, double tol) {
  const double sum = sp.graph.mu(1) + sp.complement.mu(1);
  return make_report(BoundId::csikvari_terpai, Strictness::non_strict, true, sum, 4.0 * dbl(sp.n) / 3.0 - 1.0,
                     tol, sp.n);
}

BoundReport check_sum_squares_top(const SpectralPair& sp, long long s, double tol) {
  require_min(s, 2, "s");
  const bool applicable = static_cast<long long>(sp.n) >= 3 * s - 2;
  const double lhs = paired_sum(sp, 2, s, square);
  return make_report(BoundId::top_sum_squares, Strictness::strict, applicable, lhs, square(dbl(sp.n)) / 4.0, tol,
                     sp.n, s);
}

BoundReport check_abs_sum_top(const SpectralPair& sp, long long s, double tol) {
  require_min(s, 2, "s");
  const bool applicable = static_cast<long long>(sp.n) >= 3 * s - 2;
  const double lhs = paired_sum(sp, 2, s, absval);
  const double rhs = dbl(sp.n) * std::sqrt(static_cast<double>(s - 1) / 2.0);
  return make_report(BoundId::top_abs_sum, Strictness::strict, applicable, lhs, rhs, tol, sp.n, s);
}

BoundReport check_pair_top(const SpectralPair& sp, long long s, double tol) {
  require_min(s, 2, "s");
  const double rhs = square(dbl(sp.n)) / (4.0 * static_cast<double>(s - 1));
  if (s > static_cast<long long>(sp.n)) return out_of_range(BoundId::top_pair_squares, Strictness::strict, rhs, tol, sp.n, s);
  const bool applicable = static_cast<long long>(sp.n) >= 3 * s - 2;
  const auto i = static_cast<std::size_t>(s);
  const double lhs = square(sp.graph.mu(i)) + square(sp.complement.mu(i));
  return make_report(BoundId::top_pair_squares, Strictness::strict, applicable, lhs, rhs, tol, sp.n, s);
}

BoundReport check_fs_upper(const SpectralPair& sp, long long s, double tol) {
  require_min(s, 2, "s");
  const double rhs = dbl(sp.n) / std::sqrt(2.0 * static_cast<double>(s - 1)) - 1.0;
  if (s > static_cast<long long>(sp.n)) return out_of_range(BoundId::top_pair_abs, Strictness::non_strict, rhs, tol, sp.n, s);
  const bool applicable = static_cast<long long>(sp.n) >= 15 * (s - 1);
  const auto i = static_cast<std::size_t>(s);
  const double lhs = std::fabs(sp.graph.mu(i)) + std::fabs(sp.complement.mu(i));
  return make_report(BoundId::top_pair_abs, Strictness::non_strict, applicable, lhs, rhs, tol, sp.n, s);
}

BoundReport check_sum_squares_bottom(const SpectralPair& sp, long long s, double tol) {
  require_min(s, 1, "s");
  const long long n = static_cast<long long>(sp.n);
  const bool applicable = n > 2 * s;
  // Bottom indices n-s+1..n.
  const double lhs = paired_sum(sp, n - s + 1, n, square);
  const double rhs = square(dbl(sp.n) / 2.0 + static_cast<double>(s));
  return make_report(BoundId::bottom_sum_squares, Strictness::non_strict, applicable, lhs, rhs, tol, sp.n, s);
}

BoundReport check_abs_sum_bottom(const SpectralPair& sp, long long s, double tol) {
  require_min(s, 1, "s");
  const long long n = static_cast<long long>(sp.n);
  const bool applicable = n > 2 * s;
  const double lhs = paired_sum(sp, n - s + 1, n, absval);
  const double rhs = (dbl(sp.n) / 2.0 + static_cast<double>(s)) * std::sqrt(2.0 * static_cast<double>(s));
  return make_report(BoundId::bottom_abs_sum, Strictness::non_strict, applicable, lhs, rhs, tol, sp.n, s);
}

BoundReport check_pair_bottom(const SpectralPair& sp, long long s, double tol) {
  require_min(s, 1, "s");
  const double sd = static_cast<double>(s);
  const double rhs = square(dbl(sp.n) / 2.0 + sd) / sd;
  if (s > static_cast<long long>(sp.n)) return out_of_range(BoundId::bottom_pair_squares, Strictness::non_strict, rhs, tol, sp.n, s);
  const bool applicable = sp.n > pow4(s);
  const auto i = static_cast<std::size_t>(s);
  const double lhs = square(sp.graph.mu_bottom(i)) + square(sp.complement.mu_bottom(i));
  auto r = make_report(BoundId::bottom_pair_squares, Strictness::non_strict, applicable, lhs, rhs, tol, sp.n, s);
  r.note = boundary_note(sp.n, s);
  return r;
}

BoundReport check_fns_upper(const SpectralPair& sp, long long s, double tol) {
  require_min(s, 1, "s");
  const double rhs = dbl(sp.n) / std::sqrt(2.0 * static_cast<double>(s)) + 1.0;
  if (s > static_cast<long long>(sp.n)) return out_of_range(BoundId::bottom_pair_abs, Strictness::non_strict, rhs, tol, sp.n, s);
  const bool applicable = sp.n >= pow4(s);
  const auto i = static_cast<std::size_t>(s);
  const double lhs = std::fabs(sp.graph.mu_bottom(i)) + std::fabs(sp.complement.mu_bottom(i));
  auto r = make_report(BoundId::bottom_pair_abs, Strictness::non_strict, applicable, lhs, rhs, tol, sp.n, s);
  r.note = boundary_note(sp.n, s);
  return r;
}

BoundReport check_partial_square_sum(const SpectralPair& sp, std::span<const std::size_t> x, double tol) {
  std::vector<bool> seen(sp.n + 1, false);
  double lhs = 0.0;
  for (std::size_t i : x) {
    if (i < 2 || i > sp.n) {
      fail(ErrorCode::invalid_argument, "index " + std::to_string(i) + " not in {2.." + std::to_string(sp.n) + "}");
    }
    if (seen[i]) fail(ErrorCode::invalid_argument, "duplicate index " + std::to_string(i));
    seen[i] = true;
    lhs += square(sp.graph.mu(i));
  }
  auto r = make_report(BoundId::partial_square_sum, Strictness::non_strict, true, lhs, square(dbl(sp.n)) / 4.0, tol,
                       sp.n);
  r.index_set.assign(x.begin(), x.end());
  return r;
}

BoundReport check_nonpositive_eigenvalue(const SpectralPair& sp, long long s, double tol) {
  require_min(s, 2, "s");
  if (s > static_cast<long long>(sp.n)) {
    fail(ErrorCode::invalid_argument, "s = " + std::to_string(s) + " exceeds n = " + std::to_string(sp.n));
  }
  const auto i = static_cast<std::size_t>(s);
  const double mu_s = sp.graph.mu(i);
  const double rhs = dbl(sp.n) / (2.0 * std::sqrt(dbl(sp.n - i + 1)));
  return make_report(BoundId::nonpositive_eigenvalue, Strictness::non_strict, mu_s <= tol, std::fabs(mu_s), rhs,
                     tol, sp.n, s);
}

BoundReport check_ramsey_sign(const SpectralPair& sp, long long k, double tol) {
  require_min(k, 0, "k");
  if (k == 0 || k > static_cast<long long>(sp.n)) {
    auto r = make_report(BoundId::ramsey_sign, Strictness::non_strict, false, 0.0, 0.0, tol, sp.n, k);
    r.note = k == 0 ? "k = 0 indexes mu_{n+1}" : "index exceeds order";
    return r;
  }
  const auto i = static_cast<std::size_t>(k);
  const double a = sp.graph.mu_bottom(i);       // mu_{n-k+1}(G)
  const double b = sp.complement.mu_bottom(i);  // mu_{n-k+1}(complement)
  const double first = std::min(-1.0 - a, -b);
  const double second = std::min(-1.0 - b, -a);
  const bool applicable = sp.n >= pow4(k);
  return make_report(BoundId::ramsey_sign, Strictness::non_strict, applicable, 0.0, std::max(first, second), tol,
                     sp.n, k);
}

std::vector<BoundReport> check_weyl_pair(const SpectralPair& sp, long long k, double tol) {
  require_min(k, 2, "k");
  if (k > static_cast<long long>(sp.n)) {
    fail(ErrorCode::invalid_argument, "k = " + std::to_string(k) + " exceeds n = " + std::to_string(sp.n));
  }
  const auto i = static_cast<std::size_t>(k);
  const std::size_t n = sp.n;
  const double mu_k = sp.graph.mu(i);
  return {make_report(BoundId::weyl_upper, Strictness::non_strict, true, mu_k + sp.complement.mu(n - i + 2), -1.0,
                      tol, n, k),
          make_report(BoundId::weyl_lower, Strictness::non_strict, true, -1.0, mu_k + sp.complement.mu(n - i + 1),
                      tol, n, k)};
}

std::vector<BoundReport> run_battery(const SpectralPair& sp, long long s_max, double tol) {
  require_min(s_max, 1, "s_max");
  const long long n = static_cast<long long>(sp.n);
  const long long top = std::min(s_max, n);
  std::vector<BoundReport> out;

  for (auto& r : check_nosal(sp, tol)) out.push_back(std::move(r));
  out.push_back(check_csikvari_terpai(sp, tol));

  for (long long s = 2; s <= top; ++s) out.push_back(check_sum_squares_top(sp, s, tol));
  for (long long s = 2; s <= top; ++s) out.push_back(check_abs_sum_top(sp, s, tol));
  for (long long s = 2; s <= top; ++s) out.push_back(check_pair_top(sp, s, tol));
  for (long long s = 2; s <= top; ++s) out.push_back(check_fs_upper(sp, s, tol));

  for (long long s = 1; s <= top; ++s) out.push_back(check_sum_squares_bottom(sp, s, tol));
  for (long long s = 1; s <= top; ++s) out.push_back(check_abs_sum_bottom(sp, s, tol));
  for (long long s = 1; s <= top; ++s) out.push_back(check_pair_bottom(sp, s, tol));
  for (long long s = 1; s <= top; ++s) out.push_back(check_fns_upper(sp, s, tol));

  std::vector<std::size_t> x;
  for (std::size_t i = 2; i <= sp.n; ++i) x.push_back(i);
  out.push_back(check_partial_square_sum(sp, x, tol));

  for (long long s = 2; s <= top; ++s) out.push_back(check_nonpositive_eigenvalue(sp, s, tol));
  for (long long k = 0; k <= top; ++k) out.push_back(check_ramsey_sign(sp, k, tol));

  std::vector<BoundReport> lower;
  for (long long k = 2; k <= n; ++k) {
    auto pair = check_weyl_pair(sp, k, tol);
    out.push_back(std::move(pair[0]));
    lower.push_back(std::move(pair[1]));
  }
  for (auto& r : lower) out.push_back(std::move(r));
  return out;
}

std::vector<BoundReport> check_nosal(const Graph& g, double tol) { return check_nosal(spectral_pair(g), tol); }
BoundReport check_csikvari_terpai(const Graph& g, double tol) { return check_csikvari_terpai(spectral_pair(g), tol); }
BoundReport check_sum_squares_top(const Graph& g, long long s, double tol) {
  return check_sum_squares_top(spectral_pair(g), s, tol);
}
BoundReport check_abs_sum_top(const Graph& g, long long s, double tol) {
  return check_abs_sum_top(spectral_pair(g), s, tol);
}
BoundReport check_pair_top(const Graph& g, long long s, double tol) { return check_pair_top(spectral_pair(g), s, tol); }
BoundReport check_fs_upper(const Graph& g, long long s, double tol) { return check_fs_upper(spectral_pair(g), s, tol); }
BoundReport check_sum_squares_bottom(const Graph& g, long long s, double tol) {
  return check_sum_squares_bottom(spectral_pair(g), s, tol);
}
BoundReport check_abs_sum_bottom(const Graph& g, long long s, double tol) {
  return check_abs_sum_bottom(spectral_pair(g), s, tol);
}
BoundReport check_pair_bottom(const Graph& g, long long s, double tol) {
  return check_pair_bottom(spectral_pair(g), s, tol);
}
BoundReport check_fns_upper(const Graph& g, long long s, double tol) {
  return check_fns_upper(spectral_pair(g), s, tol);
}
BoundReport check_partial_square_sum(const Graph& g, std::span<const std::size_t> x, double tol) {
  return check_partial_square_sum(spectral_pair(g), x, tol);
}
BoundReport check_nonpositive_eigenvalue(const Graph& g, long long s, double tol) { return check_nonpositive_eigenvalue(spectral_pair(g), s, tol); }
BoundReport check_ramsey_sign(const Graph& g, long long k, double tol) {
  return check_ramsey_sign(spectral_pair(g), k, tol);
}
std::vector<BoundReport> check_weyl_pair(const Graph& g, long long k, double tol) {
  return check_weyl_pair(spectral_pair(g), k, tol);
}
std::vector<BoundReport> run_battery(const Graph& g, long long s_max, double tol) {
  return run_battery(spectral_pair(g), s_max, tol);
}

}  // namespace ng
