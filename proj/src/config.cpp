#include "config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace ng {
namespace {

std::size_t initial_cap() {
  const char* env = std::getenv("NG_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefaultMaxOrder;
  return static_cast<std::size_t>(v);
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::size_t max_order() { return cap_storage().load(std::memory_order_relaxed); }

void set_max_order(std::size_t cap) {
  if (cap == 0) fail(ErrorCode::invalid_argument, "size cap must be positive");
  cap_storage().store(cap, std::memory_order_relaxed);
}

void require_within_cap(std::size_t n, const char* what) {
  if (n > max_order()) {
    fail(ErrorCode::size_cap, std::string(what) + ": order " + std::to_string(n) +
                                  " exceeds size cap " + std::to_string(max_order()) +
                                  " (set NG_MAX_ORDER to raise it)");
  }
}

}  // namespace ng
