#pragma once

// Randomised property checks shared by the unit tests and the acceptance run.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qcong/qfactory.hpp"
#include "qcong/series.hpp"

namespace props {

using namespace qcong;

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void record(bool good, const std::string& what) {
    ++cases;
    if (!good && failures++ == 0) {
      first_failure = what;
    }
  }
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  long value(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  CoeffMode mode() {
    static const std::vector<std::uint64_t> moduli = {2, 3, 4, 5, 7, 8, 25, 125, 2147483647ULL,
                                                      2147483648ULL};
    if (value(0, 2) == 0) {
      return CoeffMode::exact();
    }
    return CoeffMode::modular(moduli[size(0, moduli.size() - 1)]);
  }

  // Random series; `unit` forces constant term +-1.
  Series series(std::size_t trunc, CoeffMode mode, bool unit = false) {
    std::vector<Integer> c(trunc);
    const long density = value(1, 4);
    for (std::size_t i = 0; i < trunc; ++i) {
      if (value(0, density) == 0) {
        c[i] = mode.is_exact() ? Integer(value(-9, 9)) : Integer(value(0, 1L << 40));
      }
    }
    if (unit) {
      c[0] = value(0, 1) ? 1 : -1;
    }
    Series s(std::move(c), trunc);
    return mode.is_exact() ? s : reduce_mod(s, mode.modulus());
  }

 private:
  std::mt19937_64 rng_;
};

inline std::string describe(const char* what, std::size_t trunc, const CoeffMode& m) {
  std::ostringstream out;
  out << what << " (trunc " << trunc << ", " << (m.is_exact() ? "exact" : "mod " + std::to_string(m.modulus())) << ")";
  return out.str();
}

inline Outcome ring_laws(int cases, std::uint64_t seed = 1) {
  Outcome o;
  o.name = "ring laws";
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const CoeffMode m = g.mode();
    const Series a = g.series(g.size(1, 40), m);
    const Series b = g.series(g.size(1, 40), m);
    const Series c = g.series(g.size(1, 40), m);
    const bool good = a * b == b * a && (a * b) * c == a * (b * c) &&
                      a * (b + c) == a * b + a * c && (a + b) - b == a.truncated(std::min(a.trunc(), b.trunc()));
    o.record(good, describe("ring law", a.trunc(), m));
  }
  return o;
}

inline Outcome dissection_round_trip(int cases, std::uint64_t seed = 2) {
  Outcome o;
  o.name = "dissection round-trip";
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const CoeffMode m = g.mode();
    const std::size_t t = g.size(1, 12);
    const std::size_t n = g.size(t, 80);
    const Series a = g.series(n, m);
    Series total = Series::zero(n, m);
    for (std::size_t j = 0; j < t; ++j) {
      const Series part = shift(substitute_power(dissect(a, t, j), t), j);
      total = total + part.truncated(std::min(part.trunc(), n));
    }
    const Agreement agree = compare(total, a);
    o.record(agree.equal() && agree.compared == n, describe("dissection", n, m));
  }
  return o;
}

inline Outcome invert_pow_contracts(int cases, std::uint64_t seed = 3) {
  Outcome o;
  o.name = "invert/pow contracts";
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const CoeffMode m = g.mode();
    const std::size_t n = g.size(1, 30);
    const Series a = g.series(n, m, true);
    const Series one = Series::constant(1, n, m);
    const long e1 = g.value(-4, 4);
    const long e2 = g.value(-4, 4);
    const bool good = a * invert(a) == one && invert(a) * a == one && invert(invert(a)) == a &&
                      pow(a, 0) == one && pow(a, 1) == a && pow(a, e1) * pow(a, -e1) == one &&
                      pow(a, e1 + e2) == pow(a, e1) * pow(a, e2);
    o.record(good, describe("invert/pow", n, m));
  }
  return o;
}

inline Outcome theta_vs_bilateral(int cases, std::uint64_t seed = 4) {
  Outcome o;
  o.name = "theta product vs bilateral sum";
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const auto A = static_cast<std::uint64_t>(g.value(1, 20));
    const auto B = static_cast<std::uint64_t>(g.value(1, 20));
    const std::size_t n = g.size(1, 250);
    const Series product = theta_f(A, B, n);
    const Series sum = theta_bilateral_sum(A, B, n);
    const Series reference(oracle::bilateral(static_cast<std::int64_t>(A), static_cast<std::int64_t>(B), n), n);
    const CoeffMode m = g.mode();
    bool good = product == sum && sum == reference;
    if (!m.is_exact()) {
      good = good && theta_f(A, B, n, m) == reduce_mod(reference, m.modulus());
    }
    o.record(good, "f(-q^" + std::to_string(A) + ", -q^" + std::to_string(B) + ") to " + std::to_string(n));
  }
  return o;
}

inline Outcome pentagonal_sparse_vs_dense(int cases, std::uint64_t seed = 5) {
  Outcome o;
  o.name = "pentagonal sparse vs dense";
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const auto d = static_cast<std::uint64_t>(g.value(1, 10));
    const std::size_t n = g.size(1, 400);
    const Series sparse = euler_pentagonal(d, n);
    const Series dense(oracle::pochhammer_dense(d, d, n), n);
    const CoeffMode m = g.mode();
    bool good = sparse == dense && pochhammer_product(d, d, 1, n) == dense;
    if (!m.is_exact()) {
      good = good && euler_pentagonal(d, n, m) == reduce_mod(dense, m.modulus());
    }
    o.record(good, "(q^" + std::to_string(d) + ";q^" + std::to_string(d) + ") to " + std::to_string(n));
  }
  return o;
}

}  // namespace props
