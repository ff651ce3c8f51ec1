#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <random>

#include "constructions.hpp"
#include "eigen.hpp"
#include "error.hpp"
#include "helpers.hpp"
#include "spectrum.hpp"

using namespace ng;
using ng::testing::er;
using ng::testing::jacobi_eigenvalues;
using ng::testing::max_abs_diff;
using ng::testing::named;

namespace {

std::vector<double> values(const Spectrum& s) { return {s.values().begin(), s.values().end()}; }

SymmetricMatrix to_matrix(const ng::testing::Dense& a) {
  SymmetricMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) m.set(i, j, a[i][j]);
  return m;
}

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST(AdjacencySpectrum, ClosedForms) {
  EXPECT_LT(max_abs_diff(values(adjacency_spectrum(named(GeneratorKind::complete, 4))), {3, -1, -1, -1}), 1e-12);
  EXPECT_LT(max_abs_diff(values(adjacency_spectrum(named(GeneratorKind::complete_bipartite, 2, 2))), {2, 0, 0, -2}),
            1e-12);
  EXPECT_LT(max_abs_diff(values(adjacency_spectrum(named(GeneratorKind::path, 4))),
                         {kPhi, kPhi - 1.0, 1.0 - kPhi, -kPhi}),
            1e-12);
  EXPECT_EQ(values(adjacency_spectrum(Graph(1))), std::vector<double>{0.0});
}

TEST(AdjacencySpectrum, CycleAccuracyAtOrder512) {
  for (std::size_t n : {5u, 64u, 512u}) {
    const auto got = values(adjacency_spectrum(named(GeneratorKind::cycle, n)));
    EXPECT_LT(max_abs_diff(got, ng::testing::cycle_spectrum(n)), 1e-10 * static_cast<double>(n)) << n;
  }
}

TEST(AdjacencySpectrum, RankDeficientBipartiteGraphs) {
  for (std::size_t n = 2; n <= 80; ++n) {
    for (std::size_t a = 1; a < n; ++a) {
      const double r = std::sqrt(static_cast<double>(a * (n - a)));
      std::vector<double> want(n, 0.0);
      want.front() = r;
      want.back() = -r;
      const auto got = values(adjacency_spectrum(named(GeneratorKind::complete_bipartite, a, n - a)));
      ASSERT_LT(max_abs_diff(got, want), 1e-10 * static_cast<double>(n)) << a << ' ' << n - a;
    }
  }
}

TEST(AdjacencySpectrum, MatchesJacobiOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const Graph g = er(n, ng::unit_interval(rng()), rng());
    const auto ours = values(adjacency_spectrum(g));
    const auto ref = jacobi_eigenvalues(ng::testing::dense_adjacency(g));
    ASSERT_LT(max_abs_diff(ours, ref), 1e-10 * static_cast<double>(n));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const auto a = ng::testing::random_symmetric(n, rng, 3.0);
    ASSERT_LT(max_abs_diff(symmetric_eigenvalues(to_matrix(a)), jacobi_eigenvalues(a)), 1e-9);
  }
}

TEST(AdjacencySpectrum, Deterministic) {
  const Graph g = er(50, 0.4, 8);
  const auto a = values(adjacency_spectrum(g));
  const auto b = values(adjacency_spectrum(g));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(std::memcmp(&a[i], &b[i], sizeof(double)), 0);
}

TEST(AdjacencySpectrum, DiagonalAndZeroMatrices) {
  SymmetricMatrix m(4);
  m.set(0, 0, 3.0);
  m.set(2, 2, -2.0);
  EXPECT_EQ(symmetric_eigenvalues(m), (std::vector<double>{3.0, 0.0, 0.0, -2.0}));
  EXPECT_TRUE(symmetric_eigenvalues(SymmetricMatrix(0)).empty());
}

TEST(SpectrumIndexing, MuAndBottom) {
  const Spectrum k4 = adjacency_spectrum(named(GeneratorKind::complete, 4));
  EXPECT_NEAR(k4.mu(1), 3.0, 1e-12);
  EXPECT_NEAR(k4.mu_bottom(1), -1.0, 1e-12);
  EXPECT_NEAR(adjacency_spectrum(named(GeneratorKind::complete_bipartite, 2, 2)).mu_bottom(1), -2.0, 1e-12);
  EXPECT_THROW(k4.mu(0), Error);
  EXPECT_THROW(k4.mu(5), Error);
  EXPECT_THROW(k4.mu_bottom(0), Error);
  EXPECT_THROW(k4.mu_bottom(5), Error);
  const Spectrum unsorted({1.0, 3.0, -2.0});
  EXPECT_EQ(unsorted.mu(1), 3.0);
  EXPECT_EQ(unsorted.mu_bottom(1), -2.0);
}

TEST(RegularShift, IdentityAndCompleteGraph) {
  const Spectrum c6 = adjacency_spectrum(named(GeneratorKind::cycle, 6));
  EXPECT_LT(max_abs_diff(values(regular_shift_spectrum(c6, 2.0, 1.0, 0.0, 6)), values(c6)), 1e-12);

  // J_3 - A(K_3) = I_3.
  const Spectrum k3 = adjacency_spectrum(named(GeneratorKind::complete, 3));
  EXPECT_LT(max_abs_diff(values(regular_shift_spectrum(k3, 2.0, -1.0, 1.0, 3)), {1, 1, 1}), 1e-12);
}

TEST(RegularShift, MatchesDirectSolveForAk) {
  for (std::size_t k : {2u, 3u}) {
    const Matrix01 a = construct_A(k);
    const std::size_t m = a.order();
    const Spectrum direct_a = matrix_spectrum(a.to_matrix());
    const Spectrum shifted = regular_shift_spectrum(direct_a, static_cast<double>(m / 2), 2.0, -1.0, m);
    SymmetricMatrix twice_minus_j(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) twice_minus_j.set(i, j, a(i, j) ? 1.0 : -1.0);
    EXPECT_LT(max_abs_diff(values(shifted), values(matrix_spectrum(twice_minus_j))), 1e-10) << k;
  }
  // Frozen from tests/oracles/a_matrix_oracle.py.
  const Spectrum a3 = matrix_spectrum(construct_A(3).to_matrix());
  EXPECT_LT(max_abs_diff(values(regular_shift_spectrum(a3, 4.0, 2.0, -1.0, 8)), {4, 4, 0, 0, 0, 0, -4, -4}), 1e-10);
}

TEST(RegularShift, RejectsRowSumMismatch) {
  const Spectrum k3 = adjacency_spectrum(named(GeneratorKind::complete, 3));
  EXPECT_THROW(regular_shift_spectrum(k3, 1.0, 1.0, 0.0, 3), Error);
  EXPECT_THROW(regular_shift_spectrum(k3, 2.0, 1.0, 0.0, 4), Error);
}

TEST(BlowupClosedForm, Examples) {
  const Spectrum k2({1.0, -1.0});
  EXPECT_EQ(values(blowup_spectrum_closed_form(k2, 2, BlowupVariant::independent)),
            (std::vector<double>{2, 0, 0, -2}));
  EXPECT_EQ(values(blowup_spectrum_closed_form(k2, 2, BlowupVariant::clique)), (std::vector<double>{3, -1, -1, -1}));
  const Spectrum c5 = adjacency_spectrum(named(GeneratorKind::cycle, 5));
  EXPECT_EQ(values(blowup_spectrum_closed_form(c5, 1, BlowupVariant::independent)), values(c5));
  EXPECT_LT(max_abs_diff(values(blowup_spectrum_closed_form(c5, 1, BlowupVariant::clique)), values(c5)), 1e-15);
  EXPECT_THROW(blowup_spectrum_closed_form(c5, 0, BlowupVariant::clique), Error);
}

TEST(SpectralProperties, TraceIdentitiesAndAverageDegree) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const Graph g = er(n, ng::unit_interval(rng()), rng());
    const Spectrum s = adjacency_spectrum(g);
    const double tol = kDefaultTol;
    ASSERT_NEAR(s.sum(), 0.0, tol);
    ASSERT_NEAR(s.sum_of_squares(), 2.0 * static_cast<double>(g.edge_count()), tol);
    ASSERT_GE(s.mu(1), 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n) - tol);
    ASSERT_TRUE(std::is_sorted(s.values().begin(), s.values().end(), std::greater<>()));
  }
}

TEST(SpectralProperties, BlowupClosedFormMatchesDirect) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    const std::size_t t = 1 + rng() % 4;
    const Graph g = er(n, ng::unit_interval(rng()), rng());
    const Spectrum base = adjacency_spectrum(g);
    ASSERT_LT(max_abs_diff(values(blowup_spectrum_closed_form(base, t, BlowupVariant::independent)),
                           values(adjacency_spectrum(blowup_independent(g, t)))),
              1e-8);
    ASSERT_LT(max_abs_diff(values(blowup_spectrum_closed_form(base, t, BlowupVariant::clique)),
                           values(adjacency_spectrum(blowup_clique(g, t)))),
              1e-8);
  }
}

TEST(SpectralProperties, CauchyInterlacing) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 20;
    const Graph g = er(n, ng::unit_interval(rng()), rng());
    std::vector<std::size_t> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    std::shuffle(verts.begin(), verts.end(), rng);
    const std::size_t m = 1 + rng() % n;
    verts.resize(m);
    const Spectrum sg = adjacency_spectrum(g);
    const Spectrum sh = adjacency_spectrum(induced_subgraph(g, verts));
    for (std::size_t i = 0; i < m; ++i) {
      ASSERT_GE(sh.mu(m - i), sg.mu(n - i) - kDefaultTol);
      ASSERT_LE(sh.mu(i + 1), sg.mu(i + 1) + kDefaultTol);
    }
  }
}

TEST(SpectralProperties, WeylSandwich) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const auto p = ng::testing::random_symmetric(n, rng);
    const auto q = ng::testing::random_symmetric(n, rng);
    auto d = p;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] -= q[i][j];
    const auto ep = symmetric_eigenvalues(to_matrix(p));
    const auto eq = symmetric_eigenvalues(to_matrix(q));
    const auto ed = symmetric_eigenvalues(to_matrix(d));
    for (std::size_t s = 0; s < n; ++s) {
      ASSERT_GE(ep[s] - eq[s], ed[n - 1] - kDefaultTol);
      ASSERT_LE(ep[s] - eq[s], ed[0] + kDefaultTol);
    }
  }
}
