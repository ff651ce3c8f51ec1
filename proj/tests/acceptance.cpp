// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "constructions.hpp"
#include "eigen.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "helpers.hpp"
#include "search.hpp"
#include "spectrum.hpp"

using namespace ng;
using ng::testing::circulant;
using ng::testing::er;
using ng::testing::named;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<double> values(const Spectrum& s) { return {s.values().begin(), s.values().end()}; }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. Numeric spectrum of A_{k+1} against its closed form, k = 1..6.
Outcome construction_spectrum() {
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto numeric = values(matrix_spectrum(construct_A(k + 1).to_matrix()));
    worst = std::max(worst, max_abs_diff(numeric, values(a_spectrum_closed_form(k))));
  }
  return {worst <= kTol, "max error " + sci(worst)};
}

// 2. Blow-up closed forms on 200 seeded graphs, n <= 15, t = 1..4.
Outcome blowup_closed_forms() {
  constexpr double kTol = 1e-8;
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    const Graph g = er(n, unit_interval(rng()), rng());
    const Spectrum base = adjacency_spectrum(g);
    for (std::size_t t = 1; t <= 4; ++t) {
      worst = std::max(worst, max_abs_diff(values(blowup_spectrum_closed_form(base, t, BlowupVariant::independent)),
                                           values(adjacency_spectrum(blowup_independent(g, t)))));
      worst = std::max(worst, max_abs_diff(values(blowup_spectrum_closed_form(base, t, BlowupVariant::clique)),
                                           values(adjacency_spectrum(blowup_clique(g, t)))));
    }
  }
  return {worst <= kTol, "max error " + sci(worst)};
}

// 3. Witness inequalities for (k, t) in {1,2,3} x {1,2,4,8}.
Outcome witness_graphs() {
  constexpr double kTol = 1e-9;
  std::size_t checked = 0, failed = 0;
  double min_margin = INFINITY;
  for (std::size_t k : {1u, 2u, 3u}) {
    for (std::size_t t : {1u, 2u, 4u, 8u}) {
      for (const auto& r : witness_check(k, t, kTol)) {
        ++checked;
        failed += r.violated() || !r.applicable;
        min_margin = std::min(min_margin, r.margin);
      }
    }
  }
  return {failed == 0 && checked > 0,
          std::to_string(checked) + " inequalities, " + std::to_string(failed) + " failed, min margin " +
              sci(min_margin)};
}

// 4. Full battery at s_max = 5 on 2000 Erdos-Renyi graphs and the named families.
Outcome soundness_battery() {
  constexpr long long kSMax = 5;
  std::vector<Graph> suite;
  const double ps[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  std::mt19937_64 rng(77);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 4 + rng() % 61;
    suite.push_back(er(n, ps[i % 5], rng()));
  }
  for (std::size_t n = 1; n <= 64; ++n) {
    suite.push_back(named(GeneratorKind::complete, n));
    suite.push_back(named(GeneratorKind::empty, n));
    suite.push_back(named(GeneratorKind::path, n));
    if (n >= 3) suite.push_back(named(GeneratorKind::cycle, n));
    for (std::size_t a = 1; a < n; ++a) suite.push_back(named(GeneratorKind::complete_bipartite, a, n - a));
  }

  std::size_t reports = 0, applicable = 0, violations = 0;
  std::string first;
  for (const Graph& g : suite) {
    for (const auto& r : run_battery(g, kSMax)) {
      ++reports;
      applicable += r.applicable;
      if (r.violated()) {
        if (first.empty()) first = std::string(to_string(r.id)) + " on " + emit_graph6(g);
        ++violations;
      }
    }
  }
  std::string detail = std::to_string(suite.size()) + " graphs, " + std::to_string(applicable) + "/" +
                       std::to_string(reports) + " applicable reports, " + std::to_string(violations) +
                       " violations";
  if (!first.empty()) detail += " (first: " + first + ")";
  return {violations == 0, detail};
}

// 5. Exact f_2(n) for n = 2..7 against n/sqrt(2) - 3 < f_2(n) < n/sqrt(2).
Outcome exhaustive_exactness() {
  bool ok = true;
  std::string detail;
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto first = exhaustive_f(n, 2, Family::top);
    const auto again = exhaustive_f(n, 2, Family::top);
    const double upper = static_cast<double>(n) / std::sqrt(2.0);
    bool row_ok = first.exact && first.value < upper && first.witness == again.witness && first.value == again.value;
    if (n >= 5) row_ok = row_ok && first.value > upper - 3.0;
    ok = ok && row_ok;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%sn=%zu:%.6f", detail.empty() ? "" : " ", n, first.value);
    detail += buf;
  }
  return {ok, detail};
}

// 6. mu_n^2(K_{n/2,n/2}) + mu_n^2(complement) = n^2/4 + 1 for even n in 4..20.
Outcome balanced_bipartite_identity() {
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  for (std::size_t n = 4; n <= 20; n += 2) {
    const SpectralPair sp = spectral_pair(named(GeneratorKind::complete_bipartite, n / 2, n / 2));
    const double lhs = std::pow(sp.graph.mu(n), 2) + std::pow(sp.complement.mu(n), 2);
    worst = std::max(worst, std::fabs(lhs - (static_cast<double>(n * n) / 4.0 + 1.0)));
  }
  return {worst <= kTol, "max error " + sci(worst)};
}

// 7. mu(G) + mu(complement) = n - 1 for regular graphs.
Outcome regular_nosal_tightness() {
  constexpr double kTol = 1e-9;
  std::vector<Graph> regular;
  for (std::size_t n = 1; n <= 40; ++n) regular.push_back(named(GeneratorKind::complete, n));
  for (std::size_t n = 3; n <= 40; ++n) regular.push_back(named(GeneratorKind::cycle, n));
  for (std::size_t n = 7; n <= 40; ++n) {
    regular.push_back(circulant(n, {1, 2}));
    regular.push_back(circulant(n, {1, 3}));
  }
  for (std::size_t n = 11; n <= 40; ++n) regular.push_back(circulant(n, {2, 3, 5}));
  double worst = 0.0;
  for (const Graph& g : regular) {
    const SpectralPair sp = spectral_pair(g);
    worst = std::max(worst, std::fabs(sp.graph.mu(1) + sp.complement.mu(1) - static_cast<double>(g.order() - 1)));
  }
  return {worst <= kTol, std::to_string(regular.size()) + " graphs, max error " + sci(worst)};
}

// 8. Cauchy interlacing on induced subgraphs and the Weyl sandwich on P - Q.
Outcome interlacing_and_weyl() {
  constexpr double kTol = 1e-8;
  std::mt19937_64 rng(4242);
  std::size_t interlace_bad = 0, weyl_bad = 0;

  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const Graph g = er(n, unit_interval(rng()), rng());
    std::vector<std::size_t> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    std::shuffle(verts.begin(), verts.end(), rng);
    const std::size_t m = 1 + rng() % n;
    verts.resize(m);
    const Spectrum sg = adjacency_spectrum(g);
    const Spectrum sh = adjacency_spectrum(induced_subgraph(g, verts));
    for (std::size_t i = 1; i <= m; ++i) {
      // mu_i(G) >= mu_i(H) >= mu_{n-m+i}(G)
      if (sh.mu(i) > sg.mu(i) + kTol || sh.mu(i) < sg.mu(n - m + i) - kTol) ++interlace_bad;
    }
  }

  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 25;
    SymmetricMatrix p(n), q(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const double a = normal(rng), b = normal(rng);
        p.set(i, j, a);
        q.set(i, j, b);
        d.set(i, j, a - b);
      }
    }
    const auto ep = symmetric_eigenvalues(p);
    const auto eq = symmetric_eigenvalues(q);
    const auto ed = symmetric_eigenvalues(d);
    for (std::size_t i = 0; i < n; ++i) {
      const double gap = ep[i] - eq[i];
      if (gap < ed[n - 1] - kTol || gap > ed[0] + kTol) ++weyl_bad;
    }
  }
  return {interlace_bad == 0 && weyl_bad == 0,
          "interlacing violations " + std::to_string(interlace_bad) + ", sandwich violations " +
              std::to_string(weyl_bad)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "construction spectrum k=1..6 (tol 1e-9)", 5.0, construction_spectrum},
      {2, "blow-up closed forms, 200 graphs, t=1..4 (tol 1e-8)", 60.0, blowup_closed_forms},
      {3, "witness graphs (k,t) in {1,2,3}x{1,2,4,8} (tol 1e-9)", 30.0, witness_graphs},
      {4, "soundness battery s_max=5, 2000 random + named graphs (tol 1e-8)", 600.0, soundness_battery},
      {5, "exhaustive f_2(n), n=2..7, within (n/sqrt2 - 3, n/sqrt2)", 300.0, exhaustive_exactness},
      {6, "K_{n/2,n/2} bottom identity, even n=4..20 (tol 1e-9)", 1.0, balanced_bipartite_identity},
      {7, "regular graphs: mu + mu_bar = n - 1 (tol 1e-9)", 60.0, regular_nosal_tightness},
      {8, "interlacing and Weyl sandwich, 500 + 500 pairs (tol 1e-8)", 60.0, interlacing_and_weyl},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = out.ok && in_time;
    failures += !pass;
    std::printf("%s criterion %d: %s -- %s; %.2fs (budget %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs, c.budget_seconds, in_time ? "" : " OVER BUDGET");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
