#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "properties.hpp"
#include "qcong/config.hpp"
#include "qcong/series.hpp"

using namespace qcong;

namespace {

Series naive_product(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.trunc(), b.trunc());
  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) {
      c[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  Series s(std::move(c), n);
  return a.is_exact() ? s : reduce_mod(s, a.mode().modulus());
}

}  // namespace

TEST_CASE("construction and modes") {
  CHECK_THROWS_AS(CoeffMode::modular(1), SeriesError);
  CHECK_THROWS_AS(CoeffMode::modular((1ULL << 31) + 1), SeriesError);
  CHECK(CoeffMode::modular(1ULL << 31).modulus() == (1U << 31));
  CHECK_THROWS_AS(Series({1, 2}, 0, CoeffMode::modular(5)), SeriesError);
  CHECK_THROWS_AS(Series(std::vector<std::uint32_t>{7}, 1, CoeffMode::modular(5)), SeriesError);

  const Series s = make_series({1, -2, 3}, 5);
  CHECK(s.trunc() == 5);
  CHECK(s.coeff(2) == 3);
  CHECK(s.coeff(4) == 0);
  CHECK_THROWS_AS(s.coeff(5), std::out_of_range);
  CHECK(s.nonzero_count() == 3);
  CHECK(reduce_mod(s, 5).coeff(1) == 3);
}

TEST_CASE("truncation bookkeeping") {
  const Series a = make_series({1, 1, 1}, 10);
  const Series b = make_series({1, 2}, 4);
  CHECK((a + b).trunc() == 4);
  CHECK((a * b).trunc() == 4);
  CHECK(shift(a, 3).trunc() == 13);
  CHECK(shift(a, 3).coeff(3) == 1);
  CHECK(substitute_power(a, 4).trunc() == 40);
  CHECK(substitute_power(a, 4).coeff(8) == 1);
  CHECK(substitute_power(a, 4).coeff(9) == 0);
  CHECK(dissect(a, 3, 1).trunc() == 3);
  CHECK(dissect(a, 3, 0).trunc() == 4);
  CHECK_THROWS(dissect(a, 3, 3));
  CHECK_THROWS(dissect(a, 0, 0));
}

TEST_CASE("substitute_power respects the global cap") {
  const std::size_t saved = config::max_truncation();
  config::set_max_truncation(100);
  const Series a = make_series({1, 1}, 60);
  CHECK(substitute_power(a, 5).trunc() == 100);
  CHECK(substitute_power(make_series({1}, 200), 2).trunc() == 200);
  config::set_max_truncation(saved);
}

TEST_CASE("inversion") {
  const Series one_minus_q = make_series({1, -1}, 20);
  const Series geometric = invert(one_minus_q);
  for (std::size_t n = 0; n < 20; ++n) {
    CHECK(geometric.coeff(n) == 1);
  }
  CHECK_THROWS_AS(invert(make_series({2, 1}, 5)), SeriesError);
  CHECK_THROWS_AS(invert(make_series({0, 1}, 5)), SeriesError);
  CHECK_THROWS_AS(invert(reduce_mod(make_series({2, 1}, 5), 4)), SeriesError);
  const Series inv3 = invert(reduce_mod(make_series({3, 1}, 5), 4));
  CHECK(reduce_mod(make_series({3, 1}, 5), 4) * inv3 == Series::constant(1, 5, CoeffMode::modular(4)));
  CHECK(divide(make_series({1}, 20), one_minus_q) == geometric);
}

TEST_CASE("power and negative power") {
  const Series a = make_series({1, 1}, 10);
  const Series cube = pow(a, 3);
  CHECK(cube.coeff(0) == 1);
  CHECK(cube.coeff(1) == 3);
  CHECK(cube.coeff(2) == 3);
  CHECK(cube.coeff(3) == 1);
  CHECK(cube.coeff(4) == 0);
  const Series inv = pow(a, -2);
  CHECK(inv.coeff(5) == -6);
}

TEST_CASE("mixed modes are rejected") {
  const Series a = make_series({1, 1}, 5);
  const Series b = reduce_mod(a, 3);
  CHECK_THROWS_AS(a + b, SeriesError);
  CHECK_THROWS_AS(a * b, SeriesError);
  CHECK_THROWS_AS(reduce_mod(b, 2), SeriesError);
  CHECK(reduce_mod(reduce_mod(a, 25), 5) == reduce_mod(a, 5));
}

TEST_CASE("reduce_mod is a ring homomorphism") {
  props::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Series a = g.series(g.size(1, 30), CoeffMode::exact());
    const Series b = g.series(g.size(1, 30), CoeffMode::exact());
    const std::uint64_t m = static_cast<std::uint64_t>(g.value(2, 1000));
    CHECK(reduce_mod(a * b, m) == reduce_mod(a, m) * reduce_mod(b, m));
    CHECK(reduce_mod(a - b, m) == reduce_mod(a, m) - reduce_mod(b, m));
  }
}

TEST_CASE("substitute_power composes") {
  props::Gen g(12);
  for (int i = 0; i < 100; ++i) {
    const Series a = g.series(g.size(1, 20), CoeffMode::exact());
    const std::size_t m1 = g.size(1, 5);
    const std::size_t m2 = g.size(1, 5);
    CHECK(substitute_power(substitute_power(a, m1), m2) == substitute_power(a, m1 * m2));
    CHECK(dissect(substitute_power(a, m1), m1, 0) == a);
  }
}

TEST_CASE("large products agree with the schoolbook product") {
  props::Gen g(13);
  for (std::uint64_t m : {4ULL, 5ULL, 2147483647ULL, 2147483648ULL}) {
    const CoeffMode mode = CoeffMode::modular(m);
    // Dense enough to cross into the transform path.
    std::vector<std::uint32_t> ra(9000);
    std::vector<std::uint32_t> rb(9000);
    for (std::size_t i = 0; i < ra.size(); ++i) {
      ra[i] = static_cast<std::uint32_t>(g.value(0, static_cast<long>(m) - 1));
      rb[i] = static_cast<std::uint32_t>(g.value(0, static_cast<long>(m) - 1));
    }
    rb[0] = 1;
    const Series a(ra, ra.size(), mode);
    const Series b(rb, rb.size(), mode);
    CHECK(a * b == naive_product(a, b));
    const Series q = divide(a, b);
    CHECK(q * b == a);
  }
}

TEST_CASE("property: ring laws") {
  const auto o = props::ring_laws(1000);
  INFO(o.first_failure);
  CHECK(o.ok());
  CHECK(o.cases == 1000);
}

TEST_CASE("property: dissection round-trip") {
  const auto o = props::dissection_round_trip(1000);
  INFO(o.first_failure);
  CHECK(o.ok());
}

TEST_CASE("property: invert and pow") {
  const auto o = props::invert_pow_contracts(1000);
  INFO(o.first_failure);
  CHECK(o.ok());
}
