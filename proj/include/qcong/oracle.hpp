#pragma once

// Combinatorial partition counts by dynamic programming.  Nothing here
// touches the series engine except bprime_series, which is the generating
// function side that the counts are checked against.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

enum class PartitionVariant {
  distinct_parts,     // b'_ell: distinct parts, none divisible by ell
  odd_parts,          // odd parts, none divisible by ell
  unrestricted_parts  // b_ell: any parts, none divisible by ell
};

struct PartitionQuery {
  std::uint64_t ell = 2;
  std::size_t n = 0;
  PartitionVariant variant = PartitionVariant::distinct_parts;
};

/// Counts for 0..nmax inclusive.  ell < 2 throws std::invalid_argument.
std::vector<Integer> partition_count_table(std::uint64_t ell, std::size_t nmax,
                                           PartitionVariant variant);
/// Same counts reduced mod m (2 <= m <= 2^31).
std::vector<std::uint32_t> partition_count_table_mod(std::uint64_t ell, std::size_t nmax,
                                                     PartitionVariant variant, std::uint32_t m);

Integer count(const PartitionQuery& query);

Integer count_bprime(std::uint64_t ell, std::size_t n);
Integer count_bprime_oddparts(std::uint64_t ell, std::size_t n);
Integer count_bregular(std::uint64_t ell, std::size_t n);

/// (q^2;q^2)(q^ell;q^ell) / ((q;q)(q^{2ell};q^{2ell})), the generating
/// function of b'_ell.
Series bprime_series(std::uint64_t ell, std::size_t trunc, CoeffMode mode = CoeffMode::exact());

}  // namespace qcong
