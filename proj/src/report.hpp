#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ng {

/// One identifier per checked inequality. Declaration order is the order in
/// which run_battery emits reports.
enum class BoundId {
  nosal_lower,             // n-1 <= mu + mu_bar
  nosal_upper,             // mu + mu_bar < sqrt(2)(n-1)
  csikvari_terpai,         // mu + mu_bar <= 4n/3 - 1
  top_sum_squares,         // sum_{i=2..s} mu_i^2 + mu_bar_i^2 < n^2/4
  top_abs_sum,             // sum_{i=2..s} |mu_i| + |mu_bar_i| < n sqrt((s-1)/2)
  top_pair_squares,        // mu_s^2 + mu_bar_s^2 < n^2 / (4(s-1))
  top_pair_abs,            // |mu_s| + |mu_bar_s| <= n / sqrt(2(s-1)) - 1
  bottom_sum_squares,      // sum_{i=1..s} of bottom squares <= (n/2 + s)^2
  bottom_abs_sum,          // sum of bottom |.| <= (n/2 + s) sqrt(2s)
  bottom_pair_squares,     // mu_{n-s+1}^2 + mu_bar_{n-s+1}^2 <= (n/2 + s)^2 / s
  bottom_pair_abs,         // |mu_{n-s+1}| + |mu_bar_{n-s+1}| <= n / sqrt(2s) + 1
  partial_square_sum,      // sum_{i in X} mu_i^2 <= n^2/4, X in {2..n}
  nonpositive_eigenvalue,  // mu_s <= 0  =>  |mu_s| <= n / (2 sqrt(n-s+1))
  ramsey_sign,             // sign pattern of mu_{n-k+1} for G and its complement
  weyl_upper,              // mu_k + mu_bar_{n-k+2} <= -1
  weyl_lower,              // mu_k + mu_bar_{n-k+1} >= -1
  witness_top,             // mu_i(G) >= n / (2 sqrt(2(s-1))) - 1
  witness_bottom,          // mu_{n-i+2}(G) <= -n / (2 sqrt(2(s-1)))
  witness_top_complement,
  witness_bottom_complement,
};

std::string_view to_string(BoundId id);

enum class Strictness { strict, non_strict };

/// One inequality instance, normalised to lhs <= rhs (or lhs < rhs).
struct BoundReport {
  BoundId id = BoundId::nosal_lower;
  bool applicable = false;
  Strictness strictness = Strictness::non_strict;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool satisfied = false;
  double tol = 0.0;
  std::size_t n = 0;
  std::optional<long long> param;            // s or k
  std::optional<std::size_t> index;          // eigenvalue index i, witness checks only
  std::vector<std::size_t> index_set;        // X, partial_square_sum only
  std::string note;

  bool violated() const noexcept { return applicable && !satisfied; }
};

/// Fills margin and satisfied. Strict inequalities pass when
/// margin > -tol, non-strict ones when margin >= -tol.
BoundReport make_report(BoundId id, Strictness strictness, bool applicable, double lhs, double rhs,
                        double tol, std::size_t n, std::optional<long long> param = std::nullopt);

}  // namespace ng
