#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ng {

/// Dense real symmetric matrix, row-major, 0-based. set() writes both
/// (i, j) and (j, i) so symmetry holds by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t order() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, double v) noexcept {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }

  std::span<const double> data() const noexcept { return a_; }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

/// All eigenvalues of `m`, sorted descending.
///
/// Householder reduction to tridiagonal form followed by implicit-shift QL.
/// The QL phase is capped at 50*n sweeps in total; exceeding the cap throws
/// ErrorCode::internal. Output is a deterministic function of the input.
std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& m);

}  // namespace ng
