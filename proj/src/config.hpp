#pragma once

#include <cstddef>

namespace ng {

/// Default absolute tolerance for every inequality comparison.
inline constexpr double kDefaultTol = 1e-8;

inline constexpr std::size_t kDefaultMaxOrder = 4096;

/// Process-wide cap on graph and matrix order. Initialised from the
/// NG_MAX_ORDER environment variable when set, otherwise kDefaultMaxOrder.
std::size_t max_order();
void set_max_order(std::size_t cap);

/// Throws ErrorCode::size_cap when n exceeds max_order().
void require_within_cap(std::size_t n, const char* what);

}  // namespace ng
