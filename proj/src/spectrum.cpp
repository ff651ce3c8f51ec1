#include "spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "error.hpp"

namespace ng {

Spectrum::Spectrum(std::vector<double> values, double tol) : values_(std::move(values)), tol_(tol) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::mu(std::size_t i) const {
  if (i < 1 || i > values_.size()) {
    fail(ErrorCode::invalid_argument,
         "eigenvalue index " + std::to_string(i) + " out of range 1.." + std::to_string(values_.size()));
  }
  return values_[i - 1];
}

double Spectrum::mu_bottom(std::size_t s) const {
  if (s < 1 || s > values_.size()) {
    fail(ErrorCode::invalid_argument,
         "bottom index " + std::to_string(s) + " out of range 1.." + std::to_string(values_.size()));
  }
  return values_[values_.size() - s];
}

double Spectrum::sum() const noexcept {
  double acc = 0.0;
  for (double v : values_) acc += v;
  return acc;
}

double Spectrum::sum_of_squares() const noexcept {
  double acc = 0.0;
  for (double v : values_) acc += v * v;
  return acc;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  SymmetricMatrix m(n);
  for (std::size_t v = 2; v <= n; ++v)
    for (std::size_t u = 1; u < v; ++u)
      if (g.bit(Graph::pair_index(u, v))) m.set(u - 1, v - 1, 1.0);
  return m;
}

Spectrum adjacency_spectrum(const Graph& g) { return Spectrum(symmetric_eigenvalues(adjacency_matrix(g))); }

Spectrum matrix_spectrum(const SymmetricMatrix& m) { return Spectrum(symmetric_eigenvalues(m)); }

Spectrum regular_shift_spectrum(const Spectrum& spec, double r, double a, double b, std::size_t n) {
  if (n != spec.order()) {
    fail(ErrorCode::invalid_argument, "order " + std::to_string(n) + " does not match spectrum of order " +
                                          std::to_string(spec.order()));
  }
  if (n == 0) fail(ErrorCode::invalid_argument, "empty spectrum");
  if (std::fabs(spec.mu(1) - r) > spec.tol()) {
    fail(ErrorCode::invalid_argument, "row-sum r does not match the largest eigenvalue");
  }
  std::vector<double> out;
  out.reserve(n);
  out.push_back(a * r + b * static_cast<double>(n));
  for (std::size_t i = 2; i <= n; ++i) out.push_back(a * spec.mu(i));
  return Spectrum(std::move(out), spec.tol());
}

Spectrum blowup_spectrum_closed_form(const Spectrum& spec, std::size_t t, BlowupVariant variant) {
  if (t == 0) fail(ErrorCode::invalid_argument, "blow-up factor t must be at least 1");
  const double td = static_cast<double>(t);
  const bool clique = variant == BlowupVariant::clique;
  std::vector<double> out;
  out.reserve(spec.order() * t);
  for (double v : spec.values()) out.push_back(clique ? td * v + td - 1.0 : td * v);
  out.insert(out.end(), spec.order() * (t - 1), clique ? -1.0 : 0.0);
  return Spectrum(std::move(out), spec.tol());
}

}  // namespace ng
