#pragma once

// p-dissections of (q;q)_inf and (q;q)_inf^3 checked term by term.

#include <cstddef>
#include <cstdint>

#include "qcong/report.hpp"

namespace qcong {

enum class DissectionTarget { f1, f1cubed };

/// Checks that the summands reproduce the target to `trunc`, that the
/// distinguished term lies in the class (p^2-1)/24 (resp. (p^2-1)/8) mod p,
/// and that every other summand is supported on a different class.
/// Throws std::invalid_argument for composite p, p < 5 with f1, or p < 3
/// with f1cubed.
VerificationReport verify_p_dissection(std::uint64_t p, DissectionTarget target, std::size_t trunc);

}  // namespace qcong
