#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcong/congruence.hpp"
#include "qcong/number_theory.hpp"
#include "qcong/oracle.hpp"

using namespace qcong;

TEST_CASE("prime eligibility against the brute Legendre symbol") {
  for (std::uint64_t p = 5; p < 200; ++p) {
    if (!is_prime(p)) {
      CHECK_THROWS_AS(eligible_prime(p), std::invalid_argument);
      continue;
    }
    const bool expected = oracle::legendre_brute(3, p) != oracle::legendre_brute(-5, p);
    CAPTURE(p);
    CHECK(eligible_prime(p) == expected);
  }
  CHECK(eligible_prime(7));
  CHECK(eligible_prime(11));
  CHECK(eligible_prime(13));
  CHECK_FALSE(eligible_prime(17));
  CHECK_THROWS_AS(eligible_prime(3), std::invalid_argument);
}

TEST_CASE("assertion validation") {
  APAssertion a{20, 7, 4, 0, 100};
  CHECK_NOTHROW(a.validate());
  CHECK(a.required_trunc() == 20 * 99 + 7 + 1);
  a.r = 20;
  CHECK_THROWS_AS(a.validate(), std::invalid_argument);
  a.r = 7;
  a.claimed = 4;
  CHECK_THROWS_AS(a.validate(), std::invalid_argument);
  a.claimed = 0;
  a.bound = 0;
  CHECK_THROWS_AS(a.validate(), std::invalid_argument);
  CHECK(to_string(ApSource::both) == "both");
  CHECK(ap_source_from_string("oracle") == ApSource::oracle);
  CHECK_THROWS(ap_source_from_string("elsewhere"));
}

TEST_CASE("mod 4 progressions by series and by counting") {
  for (auto [m, r] : {std::pair{20, 7}, {20, 15}, {100, 11}, {100, 31}}) {
    const APAssertion a{static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(r), 4, 0, 60, ApSource::both};
    CAPTURE(m);
    CAPTURE(r);
    CHECK(verify_ap(a).passed);
  }
}

TEST_CASE("a false progression gives the first bad n") {
  const APAssertion a{20, 7, 8, 0, 50, ApSource::series};
  const VerificationReport r = verify_ap(a);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->index == 0);
  CHECK(r.witness->lhs == "4");
  CHECK(oracle::brute_bprime(5, 7) == 4);
}

TEST_CASE("series must be long enough") {
  const APAssertion a{20, 7, 4, 0, 50, ApSource::series};
  CHECK_THROWS_AS(verify_ap(a, bprime_series(5, 100, CoeffMode::modular(4))), SeriesError);
}

TEST_CASE("parity characterization") {
  const VerificationReport r = verify_parity_characterization(3000);
  CHECK(r.passed);
  CHECK(r.order_checked == 3000);
  CHECK_THROWS_AS(verify_parity_characterization(3000, bprime_series(5, 100, CoeffMode::modular(2))),
                  SeriesError);
}

TEST_CASE("families for a small truncation") {
  const Series s = bprime_series(5, 20000, CoeffMode::modular(4));
  CHECK(verify_thm12_families(7, 1, 1000, s).passed);
  CHECK_THROWS_AS(verify_thm12_families(17, 0, 10, s), std::invalid_argument);
}

TEST_CASE("internal congruence") {
  const Series s = bprime_series(5, 20000, CoeffMode::modular(5));
  CHECK(verify_internal_congruence(1, std::nullopt, s).passed);
  CHECK_THROWS_AS(verify_internal_congruence(2, std::size_t{1000}, s), SeriesError);
}

TEST_CASE("parity links between b' and b") {
  for (std::uint64_t ell : {5ULL, 7ULL, 11ULL, 13ULL}) {
    CAPTURE(ell);
    CHECK(verify_cuigu(ell, 200).passed);
    CHECK(verify_sellers(ell, 200).passed);
  }
}

TEST_CASE("p = 5 passes the symbol test but not the second family") {
  CHECK(eligible_prime(5));
  const Series s = bprime_series(5, 2000, CoeffMode::modular(4));
  const VerificationReport r = verify_thm12_families(5, 0, 10, s);
  CHECK_FALSE(r.passed);
  CHECK(count_bprime(5, 91) % 4 == 2);
}
