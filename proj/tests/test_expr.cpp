#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcong/expr.hpp"
#include "qcong/oracle.hpp"
#include "qcong/qfactory.hpp"

using namespace qcong;

namespace {

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (depth == 0 || pick(0, 3) == 0) {
    switch (pick(0, 4)) {
      case 0: return expr::integer(pick(0, 50));
      case 1: return expr::monomial(pick(1, 9));
      case 2: return expr::pochhammer(pick(1, 9), pick(1, 9), pick(0, 1) == 1);
      case 3: return expr::call(ExprKind::rr, {static_cast<std::uint64_t>(pick(1, 4))});
      default: return expr::call(ExprKind::bprime, {static_cast<std::uint64_t>(pick(2, 7))});
    }
  }
  switch (pick(0, 8)) {
    case 0: return expr::binary(ExprKind::add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 1: return expr::binary(ExprKind::sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 2: return expr::binary(ExprKind::mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 3: return expr::binary(ExprKind::div, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 4: return expr::negate(random_expr(rng, depth - 1));
    case 5: return expr::power(random_expr(rng, depth - 1), pick(-3, 4));
    case 6: {
      const auto t = static_cast<std::uint64_t>(pick(1, 7));
      return expr::call(ExprKind::dissect, {t, static_cast<std::uint64_t>(pick(0, 12))},
                        {random_expr(rng, depth - 1)});
    }
    case 7: return expr::call(ExprKind::substitute, {static_cast<std::uint64_t>(pick(1, 5))},
                              {random_expr(rng, depth - 1)});
    default: {
      const auto a = static_cast<std::uint64_t>(pick(1, 6));
      return expr::call(pick(0, 1) ? ExprKind::theta : ExprKind::theta_sum,
                        {a, static_cast<std::uint64_t>(pick(1, 6))});
    }
  }
}

std::size_t error_offset(const std::string& text) {
  try {
    parse_expression(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parsing basic forms") {
  const std::size_t n = 60;
  CHECK(evaluate(*parse_expression("(q;q)"), n) == euler_pentagonal(1, n));
  CHECK(evaluate(*parse_expression("(q^2;q^5)"), n) == pochhammer(2, 5, 1, n));
  CHECK(evaluate(*parse_expression("(q2;q5)3"), n) == pochhammer(2, 5, 3, n));
  CHECK(evaluate(*parse_expression("(q2;q5)^-2"), n) == pochhammer(2, 5, -2, n));
  CHECK(evaluate(*parse_expression("(-q;q2)"), n) == pochhammer_negated(1, 2, 1, n));
  CHECK(evaluate(*parse_expression("R(1)"), n) == rr_quotient(n));
  CHECK(evaluate(*parse_expression("theta(2,3)"), n) == theta_f(2, 3, n));
  CHECK(evaluate(*parse_expression("thetasum(2,3)"), n) == theta_bilateral_sum(2, 3, n));
  CHECK(evaluate(*parse_expression("bprime(5)"), n) == bprime_series(5, n));
  CHECK(evaluate(*parse_expression("2q^3 - 5"), n) ==
        Series::monomial(3, n, CoeffMode::exact(), 2) - Series::constant(5, n));
  CHECK(evaluate(*parse_expression("dissect(bprime(5), 5, 1)"), n) == dissect(bprime_series(5, 5 * n), 5, 1));
  CHECK(evaluate(*parse_expression("subst((q;q), 3)"), n) == euler_pentagonal(3, n));
  CHECK(evaluate(*parse_expression("eta(24; 1^24)"), n) == shift(pochhammer(1, 1, 24, n), 1).truncated(n));
}

TEST_CASE("dissect accepts offsets beyond the modulus") {
  const std::size_t n = 40;
  const Series b = bprime_series(5, 10 * n + 20);
  const Series tail = evaluate(*parse_expression("dissect(bprime(5), 5, 11)"), n);
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(tail.coeff(k) == b.coeff(5 * k + 11));
  }
}

TEST_CASE("modular evaluation") {
  const auto e = parse_expression("(q2;q2)(q5;q5)^3/((q;q)^3(q10;q10))");
  CHECK(evaluate(*e, 300, CoeffMode::modular(5)) == reduce_mod(evaluate(*e, 300), 5));
}

TEST_CASE("left associativity of products and quotients") {
  const std::size_t n = 30;
  const Series a = evaluate(*parse_expression("(q;q)/(q2;q2) (q3;q3)"), n);
  CHECK(a == euler_pentagonal(1, n) * invert(euler_pentagonal(2, n)) * euler_pentagonal(3, n));
  CHECK(evaluate(*parse_expression("8 - 3 - 2"), 2).coeff(0) == 3);
  CHECK(evaluate(*parse_expression("-q + 1"), 3).coeff(1) == -1);
}

TEST_CASE("parse errors carry the offset") {
  CHECK(error_offset("(q;q") == 4);
  CHECK(error_offset("(q;q) +") == 7);
  CHECK(error_offset("foo(1)") == 0);
  CHECK(error_offset("(q;q) $") == 6);
  CHECK(error_offset("q^-2") != std::string::npos);
  CHECK(error_offset("theta(1)") != std::string::npos);
  CHECK(error_offset("dissect(q, 0, 0)") != std::string::npos);
  CHECK(error_offset("(q0;q)") != std::string::npos);
  CHECK(error_offset("eta(10; 3^1)") != std::string::npos);
  CHECK(error_offset("(q;q)(q2;q2)") == std::string::npos);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(evaluate(*parse_expression("1/(2 + q)"), 5), SeriesError);
  CHECK_THROWS_AS(evaluate(*parse_expression("eta(2; 1^1)"), 5), SeriesError);
}

TEST_CASE("canonical printing") {
  CHECK(to_string(*parse_expression("(q^2;q^2) (q^5;q^5)^3 / ((q;q)^3 (q^10;q^10))")) ==
        "(q2;q2)*(q5;q5)^3/((q;q)^3*(q10;q10))");
  CHECK(to_string(*parse_expression("dissect( bprime(5) ,25,21)")) == "dissect(bprime(5), 25, 21)");
  CHECK(to_string(*parse_expression("eta(360; 6^-3, 12^26, 30^3, 60^-6)")) ==
        "eta(360; 6^-3, 12^26, 30^3, 60^-6)");
}

TEST_CASE("printing round-trips random trees") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const ExprPtr e = random_expr(rng, 4);
    const std::string text = to_string(*e);
    INFO(text);
    ExprPtr back;
    REQUIRE_NOTHROW(back = parse_expression(text));
    CHECK(*back == *e);
    CHECK(to_string(*back) == text);
  }
}
