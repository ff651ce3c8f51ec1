#include "eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "error.hpp"

namespace ng {
namespace {

// Reduces `a` (row-major n x n, overwritten) to tridiagonal form.
// On return d holds the diagonal and e[1..n-1] the subdiagonal, e[0] = 0.
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& d,
                    std::vector<double>& e) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = at(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (std::size_t k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit-shift QL on the tridiagonal (d, e). Eigenvalues land in d.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::size_t n) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const std::size_t cap = 50 * n;
  std::size_t sweeps = 0;

  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  // Absolute deflation floor: without it a run of zero diagonal entries
  // (rank-deficient input) never satisfies the relative test.
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm = std::max(norm, std::fabs(d[i]) + std::fabs(e[i]));
  const double floor = eps * norm;

  for (std::size_t l = 0; l < n; ++l) {
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd || std::fabs(e[m]) <= floor) break;
      }
      if (m == l) break;
      if (++sweeps > cap) {
        fail(ErrorCode::internal,
             "tridiagonal QL did not converge within " + std::to_string(cap) + " sweeps");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return {};
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> d(n, 0.0), e(n, 0.0);
  if (n == 1) {
    d[0] = a[0];
  } else {
    tridiagonalize(a, n, d, e);
    tridiagonal_ql(d, e, n);
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace ng
