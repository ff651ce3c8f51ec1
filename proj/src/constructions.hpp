#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "config.hpp"
#include "eigen.hpp"
#include "graph.hpp"
#include "report.hpp"
#include "spectrum.hpp"

namespace ng {

/// Small dense symmetric 0/1 matrix. Unlike Graph, diagonal ones are allowed.
class Matrix01 {
 public:
  /// `entries` is row-major m x m; throws unless it is symmetric with entries
  /// in {0, 1}.
  Matrix01(std::size_t m, std::vector<std::uint8_t> entries);

  std::size_t order() const noexcept { return m_; }
  bool operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * m_ + j] != 0; }
  std::vector<std::size_t> row_sums() const;

  SymmetricMatrix to_matrix() const;

  friend bool operator==(const Matrix01&, const Matrix01&) = default;

 private:
  std::size_t m_;
  std::vector<std::uint8_t> a_;
};

/// A_1 = I_2 and A_{k+1} = ((2A_k - J) (x) B + J) / 2 with B = [[1,-1],[-1,-1]],
/// evaluated in integer arithmetic. Order 2^k.
Matrix01 construct_A(std::size_t k);

/// Closed-form spectrum of A_{k+1} (order 2^{k+1}):
/// 2^k, 2^{k/2} (2^{k-1} times), 0 (2^k - 1 times), -2^{k/2} (2^{k-1} times).
Spectrum a_spectrum_closed_form(std::size_t k);

/// J_{m} - M.
Matrix01 ones_minus(const Matrix01& m);

/// M (x) J_t as a real matrix (diagonal blocks included).
SymmetricMatrix kron_ones(const Matrix01& m, std::size_t t);

/// The graph whose adjacency matrix is A_{k+1} (x) J_t with the diagonal
/// zeroed. Order 2^{k+1} t; vertex j of block a is (a-1)t + j.
Graph extremal_graph(std::size_t k, std::size_t t);

/// s = 2^{k-1} + 1, the eigenvalue index the witnesses for k are built for.
std::size_t witness_index(std::size_t k);

/// For G = extremal_graph(k, t) and each 2 <= i <= s, the four witness
/// inequalities on G and its complement. Reports carry param = s and
/// index = i.
std::vector<BoundReport> witness_check(std::size_t k, std::size_t t, double tol = kDefaultTol);

}  // namespace ng
