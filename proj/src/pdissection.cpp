#include "qcong/pdissection.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcong/number_theory.hpp"
#include "qcong/qfactory.hpp"

namespace qcong {
namespace {

struct Summand {
  std::string label;
  std::uint64_t expected_class;
  Series series;
};

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// The exponent classes mod p that actually occur in s.
bool supported_on(const Series& s, std::uint64_t p, std::uint64_t cls) {
  const auto c = s.exact_coeffs();
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] != 0 && n % p != cls) {
      return false;
    }
  }
  return true;
}

std::vector<Summand> f1_summands(std::uint64_t p, std::size_t trunc, std::uint64_t& special) {
  const auto ip = static_cast<std::int64_t>(p);
  const std::int64_t k0 = (p % 6 == 1) ? (ip - 1) / 6 : (-ip - 1) / 6;
  special = (p * p - 1) / 24;
  std::vector<Summand> out;
  const Integer sign = (floor_mod(k0, 2) == 0) ? 1 : -1;
  out.push_back({"distinguished k=" + std::to_string(k0), special % p,
                 sign * shift(pochhammer(p * p, p * p, 1, trunc), special).truncated(trunc)});
  const std::int64_t half = (ip - 1) / 2;
  for (std::int64_t k = -half; k <= half; ++k) {
    if (k == k0) {
      continue;
    }
    const std::int64_t lead = (3 * k * k + k) / 2;
    const auto a = static_cast<std::uint64_t>((3 * ip * ip + (6 * k + 1) * ip) / 2);
    const auto b = static_cast<std::uint64_t>((3 * ip * ip - (6 * k + 1) * ip) / 2);
    Series term = Series::zero(trunc);
    if (static_cast<std::size_t>(lead) < trunc) {
      const Integer s = (floor_mod(k, 2) == 0) ? 1 : -1;
      term = s * shift(theta_f(a, b, trunc - static_cast<std::size_t>(lead)),
                       static_cast<std::size_t>(lead));
    }
    out.push_back({"k=" + std::to_string(k), static_cast<std::uint64_t>(lead) % p, term});
  }
  return out;
}

std::vector<Summand> f1cubed_summands(std::uint64_t p, std::size_t trunc, std::uint64_t& special) {
  special = (p * p - 1) / 8;
  std::vector<Summand> out;
  const std::uint64_t half = (p - 1) / 2;
  const Integer sign = (half % 2 == 0) ? 1 : -1;
  out.push_back({"distinguished k=" + std::to_string(half), special % p,
                 Integer(static_cast<unsigned long>(p)) * sign *
                     shift(pochhammer(p * p, p * p, 3, trunc), special).truncated(trunc)});
  for (std::uint64_t k = 0; k < p; ++k) {
    if (k == half) {
      continue;
    }
    std::vector<Integer> c(trunc);
    const Integer ks = (k % 2 == 0) ? 1 : -1;
    for (std::uint64_t n = 0;; ++n) {
      const std::uint64_t e = k * (k + 1) / 2 + p * n * (p * n + 2 * k + 1) / 2;
      if (e >= trunc) {
        break;
      }
      const Integer ns = (n % 2 == 0) ? 1 : -1;
      c[e] += ks * ns * Integer(static_cast<unsigned long>(2 * p * n + 2 * k + 1));
    }
    out.push_back({"k=" + std::to_string(k), (k * (k + 1) / 2) % p, Series(std::move(c), trunc)});
  }
  return out;
}

}  // namespace

VerificationReport verify_p_dissection(std::uint64_t p, DissectionTarget target, std::size_t trunc) {
  const bool cubed = target == DissectionTarget::f1cubed;
  if (!is_prime(p) || p < (cubed ? 3u : 5u)) {
    throw std::invalid_argument(std::string("p-dissection of ") + (cubed ? "(q;q)^3" : "(q;q)") +
                                " needs a prime p >= " + (cubed ? "3" : "5") + ", got " +
                                std::to_string(p));
  }
  if (trunc == 0) {
    throw std::invalid_argument("truncation must be positive");
  }
  Stopwatch clock;
  VerificationReport report;
  report.id = std::string(cubed ? "p-dissection (q;q)^3" : "p-dissection (q;q)") +
              " p=" + std::to_string(p);
  report.order_checked = trunc;

  std::uint64_t special = 0;
  const auto summands = cubed ? f1cubed_summands(p, trunc, special) : f1_summands(p, trunc, special);
  const std::uint64_t special_class = special % p;
  Series total = Series::zero(trunc);
  for (const auto& s : summands) {
    total = add(total, s.series);
  }
  const Series target_series = pochhammer(1, 1, cubed ? 3 : 1, trunc);
  const Agreement agreement = compare(total, target_series);
  std::ostringstream detail;
  if (!agreement.equal()) {
    const std::size_t n = *agreement.first_mismatch;
    report.passed = false;
    report.witness = Witness{n, total.coeff(n).get_str(), target_series.coeff(n).get_str()};
    detail << "summands differ from the target at q^" << n;
  }
  for (std::size_t i = 0; report.passed && i < summands.size(); ++i) {
    const auto& s = summands[i];
    const bool distinguished = i == 0;
    if (distinguished != (s.expected_class == special_class)) {
      report.passed = false;
      detail << s.label << " falls in class " << s.expected_class << " mod " << p;
    } else if (!supported_on(s.series, p, s.expected_class)) {
      report.passed = false;
      detail << s.label << " has support outside class " << s.expected_class << " mod " << p;
    }
  }
  if (report.passed) {
    detail << summands.size() - 1 << " ordinary summands plus the distinguished term in class "
           << special_class << " mod " << p << "; other classes:";
    for (std::size_t i = 1; i < summands.size(); ++i) {
      detail << ' ' << summands[i].expected_class;
    }
  }
  report.detail = detail.str();
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace qcong
