#include "qcong/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace qcong::config {
namespace {

std::size_t from_environment() {
  const char* raw = std::getenv("QCONG_MAX_TRUNC");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultMaxTruncation;
  }
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used == std::string(raw).size() && value > 0) {
      return static_cast<std::size_t>(value);
    }
  } catch (const std::exception&) {
  }
  return kDefaultMaxTruncation;
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{from_environment()};
  return cap;
}

}  // namespace

std::size_t max_truncation() { return cap_storage().load(std::memory_order_relaxed); }

void set_max_truncation(std::size_t cap) {
  cap_storage().store(cap == 0 ? kDefaultMaxTruncation : cap, std::memory_order_relaxed);
}

}  // namespace qcong::config
