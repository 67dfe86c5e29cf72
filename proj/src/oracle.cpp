#include "qcong/oracle.hpp"

#include <stdexcept>
#include <string>

#include "qcong/qfactory.hpp"

namespace qcong {
namespace {

void require_ell(std::uint64_t ell) {
  if (ell < 2) {
    throw std::invalid_argument("regularity modulus ell must be >= 2, got " +
                                std::to_string(ell));
  }
}

bool allowed_part(std::uint64_t part, std::uint64_t ell, PartitionVariant variant) {
  if (part % ell == 0) {
    return false;
  }
  return variant != PartitionVariant::odd_parts || part % 2 == 1;
}

// 0/1 knapsack for distinct parts (descending sweep), unbounded knapsack
// otherwise (ascending sweep).
template <class T, class AddFn>
void run_knapsack(std::vector<T>& table, std::uint64_t ell, PartitionVariant variant, AddFn add) {
  const std::size_t nmax = table.size() - 1;
  for (std::size_t part = 1; part <= nmax; ++part) {
    if (!allowed_part(part, ell, variant)) {
      continue;
    }
    if (variant == PartitionVariant::distinct_parts) {
      for (std::size_t n = nmax; n >= part; --n) {
        add(table[n], table[n - part]);
      }
    } else {
      for (std::size_t n = part; n <= nmax; ++n) {
        add(table[n], table[n - part]);
      }
    }
  }
}

}  // namespace

std::vector<Integer> partition_count_table(std::uint64_t ell, std::size_t nmax,
                                           PartitionVariant variant) {
  require_ell(ell);
  std::vector<Integer> table(nmax + 1);
  table[0] = 1;
  run_knapsack(table, ell, variant, [](Integer& dst, const Integer& src) { dst += src; });
  return table;
}

std::vector<std::uint32_t> partition_count_table_mod(std::uint64_t ell, std::size_t nmax,
                                                     PartitionVariant variant, std::uint32_t m) {
  require_ell(ell);
  if (m < 2) {
    throw std::invalid_argument("modulus must be >= 2");
  }
  std::vector<std::uint32_t> table(nmax + 1, 0);
  table[0] = 1 % m;
  run_knapsack(table, ell, variant, [m](std::uint32_t& dst, std::uint32_t src) {
    const std::uint64_t s = std::uint64_t{dst} + src;
    dst = static_cast<std::uint32_t>(s >= m ? s - m : s);
  });
  return table;
}

Integer count(const PartitionQuery& query) {
  return partition_count_table(query.ell, query.n, query.variant)[query.n];
}

Integer count_bprime(std::uint64_t ell, std::size_t n) {
  return count({ell, n, PartitionVariant::distinct_parts});
}

Integer count_bprime_oddparts(std::uint64_t ell, std::size_t n) {
  return count({ell, n, PartitionVariant::odd_parts});
}

Integer count_bregular(std::uint64_t ell, std::size_t n) {
  return count({ell, n, PartitionVariant::unrestricted_parts});
}

Series bprime_series(std::uint64_t ell, std::size_t trunc, CoeffMode mode) {
  require_ell(ell);
  const QProduct gf({{2, 2, 1, false},
                     {ell, ell, 1, false},
                     {1, 1, -1, false},
                     {2 * ell, 2 * ell, -1, false}});
  return expand_qproduct(gf, trunc, mode);
}

}  // namespace qcong
