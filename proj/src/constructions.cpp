#include "constructions.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace ng {
namespace {

std::size_t checked_pow2(std::size_t k, const char* what) {
  if (k >= 63 || (std::size_t{1} << k) > max_order()) {
    fail(ErrorCode::size_cap, std::string(what) + ": order 2^" + std::to_string(k) + " exceeds size cap " +
                                  std::to_string(max_order()));
  }
  return std::size_t{1} << k;
}

void require_positive(std::size_t v, const char* name) {
  if (v == 0) fail(ErrorCode::invalid_argument, std::string(name) + " must be at least 1");
}

}  // namespace

Matrix01::Matrix01(std::size_t m, std::vector<std::uint8_t> entries) : m_(m), a_(std::move(entries)) {
  if (a_.size() != m * m) fail(ErrorCode::invalid_argument, "Matrix01 entry count does not match order");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto v = a_[i * m + j];
      if (v > 1) fail(ErrorCode::invalid_argument, "Matrix01 entry outside {0,1}");
      if (v != a_[j * m + i]) fail(ErrorCode::invalid_argument, "Matrix01 is not symmetric");
    }
  }
}

std::vector<std::size_t> Matrix01::row_sums() const {
  std::vector<std::size_t> sums(m_, 0);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j) sums[i] += a_[i * m_ + j];
  return sums;
}

SymmetricMatrix Matrix01::to_matrix() const {
  SymmetricMatrix out(m_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i; j < m_; ++j)
      if ((*this)(i, j)) out.set(i, j, 1.0);
  return out;
}

Matrix01 construct_A(std::size_t k) {
  require_positive(k, "k");
  checked_pow2(k, "construct_A");
  static constexpr int kB[2][2] = {{1, -1}, {-1, -1}};

  std::size_t m = 2;
  std::vector<std::uint8_t> a = {1, 0, 0, 1};
  for (std::size_t step = 1; step < k; ++step) {
    const std::size_t m2 = 2 * m;
    std::vector<std::uint8_t> next(m2 * m2);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const int sign = 2 * a[i * m + j] - 1;  // entry of 2A_k - J
        for (std::size_t p = 0; p < 2; ++p) {
          for (std::size_t q = 0; q < 2; ++q) {
            const int twice = sign * kB[p][q] + 1;
            if (twice != 0 && twice != 2) fail(ErrorCode::internal, "A_k recursion left {0,1}");
            next[(2 * i + p) * m2 + (2 * j + q)] = static_cast<std::uint8_t>(twice / 2);
          }
        }
      }
    }
    a = std::move(next);
    m = m2;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (a[i * m + j] != a[j * m + i]) fail(ErrorCode::internal, "A_k recursion lost symmetry");
  }
  return Matrix01(m, std::move(a));
}

Spectrum a_spectrum_closed_form(std::size_t k) {
  require_positive(k, "k");
  const std::size_t order = checked_pow2(k + 1, "a_spectrum_closed_form");
  const double top = std::ldexp(1.0, static_cast<int>(k));
  const double side = k % 2 == 0 ? std::ldexp(1.0, static_cast<int>(k / 2))
                                  : std::ldexp(std::sqrt(2.0), static_cast<int>(k / 2));
  const std::size_t half = std::size_t{1} << (k - 1);
  std::vector<double> values;
  values.reserve(order);
  values.push_back(top);
  values.insert(values.end(), half, side);
  values.insert(values.end(), (std::size_t{1} << k) - 1, 0.0);
  values.insert(values.end(), half, -side);
  return Spectrum(std::move(values));
}

Matrix01 ones_minus(const Matrix01& m) {
  const std::size_t n = m.order();
  std::vector<std::uint8_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = m(i, j) ? 0 : 1;
  return Matrix01(n, std::move(out));
}

SymmetricMatrix kron_ones(const Matrix01& m, std::size_t t) {
  require_positive(t, "t");
  const std::size_t n = m.order() * t;
  require_within_cap(n, "kron_ones");
  SymmetricMatrix out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      if (m(x / t, y / t)) out.set(x, y, 1.0);
  return out;
}

Graph extremal_graph(std::size_t k, std::size_t t) {
  require_positive(k, "k");
  require_positive(t, "t");
  const std::size_t blocks = checked_pow2(k + 1, "extremal_graph");
  if (blocks > max_order() / t) require_within_cap(max_order() + 1, "extremal_graph");
  const Matrix01 a = construct_A(k + 1);
  const std::size_t n = blocks * t;
  GraphBuilder b(n);
  for (std::size_t y = 2; y <= n; ++y)
    for (std::size_t x = 1; x < y; ++x)
      if (a((x - 1) / t, (y - 1) / t)) b.add_edge(x, y);
  return std::move(b).build();
}

std::size_t witness_index(std::size_t k) {
  require_positive(k, "k");
  return (std::size_t{1} << (k - 1)) + 1;
}

std::vector<BoundReport> witness_check(std::size_t k, std::size_t t, double tol) {
  const std::size_t s = witness_index(k);
  const Graph g = extremal_graph(k, t);
  const std::size_t n = g.order();
  const Spectrum sg = adjacency_spectrum(g);
  const Spectrum sc = adjacency_spectrum(complement(g));
  const double level = static_cast<double>(n) / (2.0 * std::sqrt(2.0 * static_cast<double>(s - 1)));
  const auto sp = static_cast<long long>(s);

  std::vector<BoundReport> out;
  auto push = [&](BoundId id, std::size_t i, double lhs, double rhs) {
    auto r = make_report(id, Strictness::non_strict, true, lhs, rhs, tol, n, sp);
    r.index = i;
    out.push_back(std::move(r));
  };
  for (BoundId id : {BoundId::witness_top, BoundId::witness_bottom, BoundId::witness_top_complement,
                     BoundId::witness_bottom_complement}) {
    const bool on_complement = id == BoundId::witness_top_complement || id == BoundId::witness_bottom_complement;
    const Spectrum& spec = on_complement ? sc : sg;
    for (std::size_t i = 2; i <= s; ++i) {
      if (id == BoundId::witness_top || id == BoundId::witness_top_complement) {
        push(id, i, level - 1.0, spec.mu(i));
      } else {
        push(id, i, spec.mu(n - i + 2), -level);
      }
    }
  }
  return out;
}

}  // namespace ng
