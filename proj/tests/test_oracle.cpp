#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcong/oracle.hpp"

using namespace qcong;

TEST_CASE("dynamic programme agrees with enumeration") {
  for (int ell : {2, 3, 5, 7}) {
    const auto distinct = partition_count_table(ell, 30, PartitionVariant::distinct_parts);
    const auto odd = partition_count_table(ell, 30, PartitionVariant::odd_parts);
    const auto regular = partition_count_table(ell, 30, PartitionVariant::unrestricted_parts);
    for (int n = 0; n <= 30; ++n) {
      CAPTURE(ell);
      CAPTURE(n);
      CHECK(distinct[n] == oracle::brute_bprime(ell, n));
      CHECK(odd[n] == oracle::brute_odd_regular(ell, n));
      CHECK(regular[n] == oracle::brute_regular(ell, n));
    }
  }
}

TEST_CASE("known values of b'_5") {
  CHECK(count_bprime(5, 0) == 1);
  CHECK(count_bprime(5, 10) == 7);
  CHECK(count_bprime(5, 18) == 26);
  CHECK(count_bprime(5, 21) == oracle::brute_bprime(5, 21));
  CHECK(oracle::brute_bprime(5, 21) == 41);
}

TEST_CASE("distinct parts and odd parts are equinumerous") {
  for (std::uint64_t ell : {3ULL, 5ULL, 7ULL, 11ULL}) {
    for (std::size_t n = 0; n <= 200; n += 7) {
      CHECK(count_bprime(ell, n) == count_bprime_oddparts(ell, n));
    }
  }
}

TEST_CASE("residue tables agree with exact tables") {
  const auto exact = partition_count_table(5, 500, PartitionVariant::distinct_parts);
  for (std::uint32_t m : {2U, 4U, 5U, 125U, 2147483647U}) {
    const auto res = partition_count_table_mod(5, 500, PartitionVariant::distinct_parts, m);
    REQUIRE(res.size() == exact.size());
    for (std::size_t n = 0; n < exact.size(); ++n) {
      const Integer r = exact[n] % m;
      CHECK(res[n] == r.get_ui());
    }
  }
}

TEST_CASE("query interface") {
  CHECK(count({5, 21, PartitionVariant::distinct_parts}) == 41);
  CHECK(count_bregular(5, 5) == oracle::brute_regular(5, 5));
  CHECK_THROWS_AS(count_bprime(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(partition_count_table(0, 4, PartitionVariant::odd_parts), std::invalid_argument);
}

TEST_CASE("generating function matches the counts") {
  const Series s = bprime_series(5, 300);
  const auto table = partition_count_table(5, 299, PartitionVariant::distinct_parts);
  for (std::size_t n = 0; n < 300; ++n) {
    CHECK(s.coeff(n) == table[n]);
  }
  const Series s7 = bprime_series(7, 100, CoeffMode::modular(3));
  for (std::size_t n = 0; n < 100; ++n) {
    CHECK(s7.coeff(n) == Integer(count_bprime(7, n) % 3));
  }
}
