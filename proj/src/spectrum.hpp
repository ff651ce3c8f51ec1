#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "config.hpp"
#include "eigen.hpp"
#include "graph.hpp"

namespace ng {

/// Eigenvalue multiset sorted descending: mu(1) >= ... >= mu(n).
class Spectrum {
 public:
  /// Sorts `values` descending. `tol` records the tolerance the spectrum is
  /// meant to be compared at.
  explicit Spectrum(std::vector<double> values, double tol = kDefaultTol);

  std::size_t order() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double tol() const noexcept { return tol_; }

  /// i-th largest, 1 <= i <= n.
  double mu(std::size_t i) const;
  /// s-th smallest, i.e. mu(n - s + 1).
  double mu_bottom(std::size_t s) const;

  double sum() const noexcept;
  double sum_of_squares() const noexcept;

 private:
  std::vector<double> values_;
  double tol_;
};

SymmetricMatrix adjacency_matrix(const Graph& g);

Spectrum adjacency_spectrum(const Graph& g);
Spectrum matrix_spectrum(const SymmetricMatrix& m);

/// Spectrum of a*M + b*J_n given the spectrum of M, whose rows all sum to r
/// and whose largest eigenvalue is r: {a*r + b*n} together with a*mu_i(M)
/// for i >= 2. Throws invalid_argument when |mu_1 - r| exceeds spec.tol()
/// or n differs from the spectrum's order.
Spectrum regular_shift_spectrum(const Spectrum& spec, double r, double a, double b, std::size_t n);

enum class BlowupVariant { independent, clique };

/// Predicted spectrum of G^(t) (t*mu_i plus n(t-1) zeros) or G^[t]
/// (t*mu_i + t - 1 plus n(t-1) entries equal to -1).
Spectrum blowup_spectrum_closed_form(const Spectrum& spec, std::size_t t, BlowupVariant variant);

}  // namespace ng
