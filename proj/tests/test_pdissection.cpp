#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcong/pdissection.hpp"

using namespace qcong;

TEST_CASE("p-dissection of (q;q)") {
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
    CAPTURE(p);
    const VerificationReport r = verify_p_dissection(p, DissectionTarget::f1, 600);
    CHECK(r.passed);
    CHECK(r.order_checked == 600);
  }
}

TEST_CASE("p-dissection of (q;q)^3") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    CAPTURE(p);
    CHECK(verify_p_dissection(p, DissectionTarget::f1cubed, 600).passed);
  }
}

TEST_CASE("invalid primes") {
  CHECK_THROWS_AS(verify_p_dissection(3, DissectionTarget::f1, 100), std::invalid_argument);
  CHECK_THROWS_AS(verify_p_dissection(9, DissectionTarget::f1, 100), std::invalid_argument);
  CHECK_THROWS_AS(verify_p_dissection(2, DissectionTarget::f1cubed, 100), std::invalid_argument);
}
