#pragma once

// Number-theoretic transforms for long modular products.  Residues modulo an
// arbitrary m <= 2^31 are convolved over up to three NTT primes and recovered
// by Garner's method.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qcong::detail {

/// Longest product length the prime set supports.
inline constexpr std::size_t kMaxNttLength = std::size_t{1} << 23;

/// (a * b) mod q^n with coefficients mod m.
std::vector<std::uint32_t> ntt_multiply(std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b, std::size_t n,
                                        std::uint32_t m);

/// 1/a mod q^n by Newton iteration; `lead_inv` is a[0]^{-1} mod m.
std::vector<std::uint32_t> ntt_inverse(std::span<const std::uint32_t> a, std::size_t n,
                                       std::uint32_t m, std::uint32_t lead_inv);

}  // namespace qcong::detail
