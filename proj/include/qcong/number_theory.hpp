#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace qcong {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
/// Prime factorisation, n >= 1.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Legendre symbol (a/p) by Euler's criterion. Throws std::invalid_argument
/// unless p is an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// Kronecker symbol (a/n) for any integer a and n.
int kronecker(std::int64_t a, std::int64_t n);

}  // namespace qcong
