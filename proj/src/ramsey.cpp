#include <bit>
#include <cstdint>
#include <string>

#include "bounds.hpp"
#include "error.hpp"

namespace ng {
namespace {

using Row = std::vector<std::uint64_t>;

std::vector<Row> adjacency_rows(const Graph& g, bool complemented) {
  const std::size_t n = g.order();
  const std::size_t words = (n + 63) / 64;
  std::vector<Row> rows(n, Row(words, 0));
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = 1; v <= n; ++v) {
      if (u == v) continue;
      if (g.adjacent(u, v) != complemented) rows[u - 1][(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
    }
  }
  return rows;
}

// Depth-first search for a clique of size `want` inside `candidates`, taking
// vertices in increasing order so the first hit is lexicographically least.
bool extend(const std::vector<Row>& rows, const Row& candidates, std::size_t want, std::vector<std::size_t>& chosen) {
  if (chosen.size() == want) return true;
  std::size_t available = 0;
  for (auto w : candidates) available += static_cast<std::size_t>(std::popcount(w));
  if (chosen.size() + available < want) return false;

  Row rest = candidates;
  for (std::size_t w = 0; w < rest.size(); ++w) {
    while (rest[w] != 0) {
      const std::size_t bit = static_cast<std::size_t>(std::countr_zero(rest[w]));
      const std::size_t v = w * 64 + bit;
      rest[w] &= rest[w] - 1;
      Row next(rest.size());
      for (std::size_t i = 0; i < rest.size(); ++i) next[i] = rest[i] & rows[v][i];
      chosen.push_back(v + 1);
      if (extend(rows, next, want, chosen)) return true;
      chosen.pop_back();
    }
  }
  return false;
}

bool find_clique(const Graph& g, bool complemented, std::size_t want, std::vector<std::size_t>& out) {
  const auto rows = adjacency_rows(g, complemented);
  const std::size_t n = g.order();
  Row all((n + 63) / 64, 0);
  for (std::size_t v = 0; v < n; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  out.clear();
  return extend(rows, all, want, out);
}

}  // namespace

RamseyCertificate ramsey_certificate(const Graph& g, long long k) {
  if (k < 1) fail(ErrorCode::invalid_argument, "ramsey_certificate needs k >= 1");
  if (static_cast<std::size_t>(k) + 1 > kRamseyMaxSetSize) {
    fail(ErrorCode::invalid_argument, "set size k+1 = " + std::to_string(k + 1) + " exceeds search cap " +
                                          std::to_string(kRamseyMaxSetSize));
  }
  const auto want = static_cast<std::size_t>(k) + 1;
  RamseyCertificate cert;
  cert.precondition_met = g.order() >= pow4(k);
  if (find_clique(g, false, want, cert.vertices)) {
    cert.found = true;
    cert.kind = RamseyKind::clique;
  } else if (find_clique(g, true, want, cert.vertices)) {
    cert.found = true;
    cert.kind = RamseyKind::independent_set;
  } else {
    cert.vertices.clear();
  }
  return cert;
}

}  // namespace ng
