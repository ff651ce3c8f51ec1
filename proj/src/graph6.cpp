#include "graph6.hpp"

#include "config.hpp"
#include "error.hpp"

namespace ng {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

[[noreturn]] void parse_error(const std::string& what) {
  fail(ErrorCode::parse, "graph6: " + what);
}

int sixbits(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) parse_error("character code " + std::to_string(v) + " outside 63..126");
  return v - kBias;
}

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    return;
  }
  out.push_back(static_cast<char>(126));
  out.push_back(static_cast<char>(126));
  for (int shift = 30; shift >= 0; shift -= 6)
    out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) parse_error("empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::size_t>(sixbits(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) != 126) {
    if (text.size() < 4) parse_error("truncated size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sixbits(text[i]));
    pos = 4;
  } else {
    if (text.size() < 8) parse_error("truncated size field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(sixbits(text[i]));
    pos = 8;
  }
  if (n == 0) parse_error("graph of order 0 is not supported");
  require_within_cap(n, "graph6");

  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t expected = (pairs + 5) / 6;
  if (text.size() - pos != expected) {
    parse_error("expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) +
                ", got " + std::to_string(text.size() - pos));
  }

  GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t v = 2; v <= n; ++v) {
    for (std::size_t u = 1; u < v; ++u, ++k) {
      const int byte = sixbits(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  }
  // Validate padding characters too.
  for (std::size_t i = pos; i < text.size(); ++i) sixbits(text[i]);
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t pairs = n * (n - 1) / 2;
  std::string out;
  out.reserve(8 + (pairs + 5) / 6);
  append_size(out, n);
  int acc = 0;
  int used = 0;
  for (std::size_t k = 0; k < pairs; ++k) {
    acc = (acc << 1) | (g.bit(k) ? 1 : 0);
    if (++used == 6) {
      out.push_back(static_cast<char>(acc + kBias));
      acc = 0;
      used = 0;
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

}  // namespace ng
