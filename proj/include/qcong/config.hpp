#pragma once

#include <cstddef>

namespace qcong::config {

/// Default cap on the truncation order produced by substitute_power.
inline constexpr std::size_t kDefaultMaxTruncation = 1'000'000;

/// Global truncation cap. Initialised from QCONG_MAX_TRUNC on first use.
std::size_t max_truncation();

void set_max_truncation(std::size_t cap);

}  // namespace qcong::config
