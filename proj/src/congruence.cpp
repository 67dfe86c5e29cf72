#include "qcong/congruence.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qcong/config.hpp"
#include "qcong/number_theory.hpp"
#include "qcong/oracle.hpp"

namespace qcong {
namespace {

constexpr std::size_t kSpotCheckLimit = 1500;
constexpr int kSpotChecks = 12;

std::uint32_t residue_at(const Series& s, std::size_t idx, std::uint64_t m) {
  return static_cast<std::uint32_t>(s.residues()[idx] % m);
}

void require_residues(const Series& s, std::uint64_t m, std::size_t need, const char* what) {
  if (s.is_exact() || s.mode().modulus() % m != 0) {
    throw SeriesError(std::string(what) + ": series must be reduced modulo a multiple of " +
                      std::to_string(m));
  }
  if (s.trunc() < need) {
    throw SeriesError(std::string(what) + ": series truncation " + std::to_string(s.trunc()) +
                      " does not cover index " + std::to_string(need - 1));
  }
}

// Exact DP counts at a few pseudo-random indices against the residue stream.
std::optional<std::string> spot_check(const APAssertion& a, const Series& residues) {
  const std::size_t limit = std::min(a.required_trunc(), kSpotCheckLimit);
  if (limit <= a.r) {
    return std::nullopt;
  }
  const auto exact = partition_count_table(a.ell, limit - 1, PartitionVariant::distinct_parts);
  const std::size_t n_max = (limit - 1 - a.r) / a.m;
  std::mt19937_64 rng(0x5eed + a.m * 131 + a.r);
  std::uniform_int_distribution<std::size_t> pick(0, n_max);
  for (int i = 0; i < kSpotChecks; ++i) {
    const std::size_t idx = a.m * pick(rng) + a.r;
    Integer expected = exact[idx] % a.modulus;
    if (expected.get_ui() != residue_at(residues, idx, a.modulus)) {
      return "residue stream disagrees with the exact count at index " + std::to_string(idx);
    }
  }
  return std::nullopt;
}

std::string ap_label(const APAssertion& a) {
  std::ostringstream out;
  out << "b'_" << a.ell << "(" << a.m << "n+" << a.r << ") = " << a.claimed << " mod "
      << a.modulus;
  return out.str();
}

Integer ipow(std::uint64_t base, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

}  // namespace

std::string to_string(ApSource s) {
  switch (s) {
    case ApSource::series:
      return "series";
    case ApSource::oracle:
      return "oracle";
    case ApSource::both:
      return "both";
  }
  return "both";
}

ApSource ap_source_from_string(const std::string& s) {
  if (s == "series") {
    return ApSource::series;
  }
  if (s == "oracle") {
    return ApSource::oracle;
  }
  if (s == "both") {
    return ApSource::both;
  }
  throw std::invalid_argument("unknown source '" + s + "' (expected series, oracle or both)");
}

void APAssertion::validate() const {
  if (m == 0 || r >= m) {
    throw std::invalid_argument("progression needs 0 <= r < m");
  }
  if (modulus < 2 || claimed >= modulus) {
    throw std::invalid_argument("congruence needs modulus >= 2 and 0 <= claimed < modulus");
  }
  if (bound == 0) {
    throw std::invalid_argument("bound must be positive");
  }
  if (ell < 2) {
    throw std::invalid_argument("ell must be >= 2");
  }
}

std::size_t APAssertion::required_trunc() const { return m * (bound - 1) + r + 1; }

bool eligible_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("eligibility is defined for primes p >= 5, got " +
                                std::to_string(p));
  }
  return legendre(3, p) != legendre(-5, p);
}

VerificationReport verify_ap(const APAssertion& a, const Series& residues) {
  a.validate();
  Stopwatch clock;
  VerificationReport report;
  report.id = ap_label(a);
  report.order_checked = a.bound;
  const std::size_t need = a.required_trunc();
  const bool use_series = a.source != ApSource::oracle;
  const bool use_oracle = a.source != ApSource::series;
  if (use_series) {
    require_residues(residues, a.modulus, need, "verify_ap");
  }
  std::vector<std::uint32_t> oracle;
  if (use_oracle) {
    oracle = partition_count_table_mod(a.ell, need - 1, PartitionVariant::distinct_parts,
                                       static_cast<std::uint32_t>(a.modulus));
  }
  for (std::size_t n = 0; n < a.bound && report.passed; ++n) {
    const std::size_t idx = a.m * n + a.r;
    const std::uint32_t from_series = use_series ? residue_at(residues, idx, a.modulus) : 0;
    const std::uint32_t from_oracle = use_oracle ? oracle[idx] : 0;
    if (use_series && use_oracle && from_series != from_oracle) {
      report.passed = false;
      report.witness = Witness{n, std::to_string(from_series), std::to_string(from_oracle)};
      report.detail = "series and oracle disagree at index " + std::to_string(idx);
      break;
    }
    const std::uint32_t value = use_series ? from_series : from_oracle;
    if (value != a.claimed) {
      report.passed = false;
      report.witness = Witness{n, std::to_string(value), std::to_string(a.claimed)};
      report.detail = "b'_" + std::to_string(a.ell) + "(" + std::to_string(idx) +
                      ") = " + std::to_string(value) + " mod " + std::to_string(a.modulus);
    }
  }
  if (report.passed && use_series) {
    if (auto problem = spot_check(a, residues)) {
      report.passed = false;
      report.detail = *problem;
    }
  }
  if (report.passed) {
    report.detail = "checked 0 <= n < " + std::to_string(a.bound) + " (source " +
                    to_string(a.source) + ")";
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_ap(const APAssertion& a) {
  a.validate();
  if (a.source == ApSource::oracle) {
    return verify_ap(a, Series::zero(1, CoeffMode::modular(a.modulus)));
  }
  return verify_ap(a, bprime_series(a.ell, a.required_trunc(), CoeffMode::modular(a.modulus)));
}

VerificationReport verify_parity_characterization(std::size_t bound, const Series& bprime_mod2) {
  if (bound == 0) {
    throw std::invalid_argument("bound must be positive");
  }
  Stopwatch clock;
  require_residues(bprime_mod2, 2, 2 * bound, "verify_parity_characterization");
  VerificationReport report;
  report.id = "parity b'_5(2n+1)";
  report.order_checked = bound;

  std::vector<char> admissible(bound, 0);
  std::size_t members = 0;
  for (std::uint64_t k = 0; 15 * k * k - 5 * k < bound; ++k) {
    admissible[15 * k * k - 5 * k] = 1;
    ++members;
  }
  for (std::uint64_t k = 1; 15 * k * k + 5 * k < bound; ++k) {
    admissible[15 * k * k + 5 * k] = 1;
    ++members;
  }
  const Series odd_part = dissect(bprime_mod2.truncated(2 * bound), 2, 1);
  for (std::size_t n = 0; n < bound; ++n) {
    const std::uint32_t parity = residue_at(odd_part, n, 2);
    if (parity != static_cast<std::uint32_t>(admissible[n])) {
      report.passed = false;
      report.witness = Witness{n, std::to_string(parity), std::to_string(int{admissible[n]})};
      report.detail = "parity of b'_5(" + std::to_string(2 * n + 1) +
                      ") does not match membership in {15k^2-5k}";
      break;
    }
  }
  if (report.passed) {
    report.detail = "0 <= n < " + std::to_string(bound) + ", " + std::to_string(members) +
                    " odd values, all at n = 15k^2-5k";
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_parity_characterization(std::size_t bound) {
  return verify_parity_characterization(bound,
                                        bprime_series(5, 2 * bound, CoeffMode::modular(2)));
}

VerificationReport verify_thm12_families(std::uint64_t p, unsigned alpha_max, std::size_t bound,
                                         const Series& bprime_mod4) {
  if (!eligible_prime(p)) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not eligible: (3/p) = " +
                                std::to_string(legendre(3, p)) + " equals (-5/p) = " +
                                std::to_string(legendre(-5, p)));
  }
  require_residues(bprime_mod4, 4, 1, "verify_thm12_families");
  Stopwatch clock;
  VerificationReport report;
  report.id = "mod-4 families p=" + std::to_string(p);
  report.order_checked = bound;
  const Integer trunc(static_cast<unsigned long>(bprime_mod4.trunc()));
  std::ostringstream summary;
  std::size_t total = 0;

  auto run_family = [&](const std::string& name, const Integer& stride, const Integer& offset,
                        const std::vector<std::uint64_t>& js, std::uint64_t step) {
    std::size_t checked = 0;
    for (std::uint64_t j : js) {
      for (std::size_t n = 0; n < bound; ++n) {
        const Integer idx = stride * (Integer(static_cast<unsigned long>(step)) *
                                          Integer(static_cast<unsigned long>(n)) +
                                      Integer(static_cast<unsigned long>(j))) +
                            offset;
        if (idx >= trunc) {
          break;
        }
        ++checked;
        const std::uint32_t v = residue_at(bprime_mod4, idx.get_ui(), 4);
        if (v != 0 && report.passed) {
          report.passed = false;
          report.witness = Witness{n, std::to_string(v), "0"};
          report.detail = name + " j=" + std::to_string(j) + ": b'_5(" + idx.get_str() +
                          ") = " + std::to_string(v) + " mod 4";
        }
      }
    }
    summary << name << ": " << checked << " indices; ";
    total += checked;
  };

  for (unsigned alpha = 0; alpha <= alpha_max; ++alpha) {
    const Integer p2a = ipow(p, 2 * alpha);
    const Integer p2a1 = ipow(p, 2 * alpha + 1);
    const Integer p2a2 = ipow(p, 2 * alpha + 2);
    const Integer num1 = 17 * p2a + 1;
    const Integer num2 = 17 * p2a2 + 1;
    if (num1 % 6 != 0 || num2 % 6 != 0) {
      throw std::logic_error("non-integral offset in the mod-4 family index formula");
    }
    std::vector<std::uint64_t> all_j;
    for (std::uint64_t j = 1; j < p; ++j) {
      all_j.push_back(j);
    }
    run_family("alpha=" + std::to_string(alpha) + " progression 5n+j", 4 * p2a, num1 / 6, {1, 3},
               5);
    run_family("alpha=" + std::to_string(alpha) + " progression pn+j", 4 * p2a1, num2 / 6, all_j,
               p);
  }
  if (report.passed) {
    report.detail = summary.str() + "all indices below " + trunc.get_str();
  }
  if (total == 0) {
    report.passed = false;
    report.detail = "no family index falls below the truncation " + trunc.get_str();
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_thm12_families(std::uint64_t p, unsigned alpha_max, std::size_t bound) {
  if (!eligible_prime(p)) {
    return verify_thm12_families(p, alpha_max, bound, Series::zero(1, CoeffMode::modular(4)));
  }
  return verify_thm12_families(
      p, alpha_max, bound, bprime_series(5, config::max_truncation(), CoeffMode::modular(4)));
}

VerificationReport verify_internal_congruence(unsigned alpha_max, std::optional<std::size_t> bound,
                                              const Series& bprime_mod5) {
  require_residues(bprime_mod5, 5, 2, "verify_internal_congruence");
  Stopwatch clock;
  const std::size_t trunc = bprime_mod5.trunc();
  VerificationReport report;
  report.id = "internal mod-5 congruence";
  report.order_checked = bound.value_or(0);
  std::ostringstream summary;
  for (unsigned alpha = 0; alpha <= alpha_max && report.passed; ++alpha) {
    const Integer big_step = ipow(5, 2 * alpha + 1);
    const Integer offset = (big_step + 1) / 6;
    if ((big_step + 1) % 6 != 0) {
      throw std::logic_error("non-integral offset in the internal congruence");
    }
    if (bound) {
      const Integer last = big_step * Integer(static_cast<unsigned long>(*bound - 1)) + offset;
      if (last >= trunc) {
        throw SeriesError("verify_internal_congruence: index " + last.get_str() +
                          " exceeds the truncation " + std::to_string(trunc));
      }
    }
    std::size_t checked = 0;
    for (std::size_t n = 0; !bound || n < *bound; ++n) {
      const Integer idx = big_step * Integer(static_cast<unsigned long>(n)) + offset;
      if (idx >= trunc || 5 * n + 1 >= trunc) {
        break;
      }
      ++checked;
      const std::uint32_t lhs = residue_at(bprime_mod5, 5 * n + 1, 5);
      const std::uint32_t rhs = residue_at(bprime_mod5, idx.get_ui(), 5);
      if (lhs != rhs) {
        report.passed = false;
        report.witness = Witness{n, std::to_string(lhs), std::to_string(rhs)};
        report.detail = "alpha=" + std::to_string(alpha) + ": b'_5(" + std::to_string(5 * n + 1) +
                        ") != b'_5(" + idx.get_str() + ") mod 5";
        break;
      }
    }
    summary << "alpha=" << alpha << ": n < " << checked << "; ";
    report.order_checked = std::max(report.order_checked, checked);
  }
  if (report.passed) {
    report.detail = summary.str() + "indices below " + std::to_string(trunc);
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_internal_congruence(unsigned alpha_max, std::size_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("bound must be positive");
  }
  const Integer last = ipow(5, 2 * alpha_max + 1) * Integer(static_cast<unsigned long>(bound - 1)) +
                       (ipow(5, 2 * alpha_max + 1) + 1) / 6;
  const std::size_t need = std::max<std::size_t>(last.get_ui() + 1, 5 * bound);
  return verify_internal_congruence(alpha_max, bound,
                                    bprime_series(5, need, CoeffMode::modular(5)));
}

VerificationReport verify_sellers(std::uint64_t ell, std::size_t bound) {
  if (ell < 3 || !is_prime(ell) || bound == 0) {
    throw std::invalid_argument("verify_sellers needs an odd prime ell and a positive bound");
  }
  Stopwatch clock;
  VerificationReport report;
  report.id = "sellers ell=" + std::to_string(ell);
  report.order_checked = bound;
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 1; r < ell; ++r) {
    if (legendre(static_cast<std::int64_t>(24 * r + 1), ell) == -1) {
      residues.push_back(r);
    }
  }
  std::ostringstream classes;
  for (std::uint64_t r : residues) {
    APAssertion a{ell, r, 2, 0, bound, ApSource::both, ell};
    VerificationReport sub = verify_ap(a);
    classes << r << ' ';
    if (!sub.passed) {
      report.passed = false;
      report.witness = sub.witness;
      report.detail = sub.id + ": " + sub.detail;
      break;
    }
  }
  if (report.passed) {
    report.detail = residues.empty() ? "no residue r has 24r+1 a nonresidue"
                                     : "r in { " + classes.str() + "}, 0 <= n < " +
                                           std::to_string(bound);
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_cuigu(std::uint64_t ell, std::size_t bound) {
  if (ell < 5 || !is_prime(ell) || bound == 0) {
    throw std::invalid_argument("verify_cuigu needs a prime ell >= 5 and a positive bound");
  }
  Stopwatch clock;
  VerificationReport report;
  report.id = "cui-gu ell=" + std::to_string(ell);
  report.order_checked = bound;
  const std::size_t offset = (ell * ell - 1) / 24;
  const std::size_t need = ell * (bound - 1) + offset + 1;
  const Series lhs_series = bprime_series(ell, need, CoeffMode::modular(2));
  const auto lhs_oracle =
      partition_count_table_mod(ell, need - 1, PartitionVariant::distinct_parts, 2);
  const auto rhs = partition_count_table_mod(ell, bound - 1, PartitionVariant::unrestricted_parts, 2);
  for (std::size_t n = 0; n < bound; ++n) {
    const std::size_t idx = ell * n + offset;
    const std::uint32_t s = residue_at(lhs_series, idx, 2);
    if (s != lhs_oracle[idx] || s != rhs[n]) {
      report.passed = false;
      report.witness = Witness{n, std::to_string(s), std::to_string(rhs[n])};
      report.detail = s != lhs_oracle[idx] ? "series and oracle disagree at b'_" +
                                                 std::to_string(ell) + "(" + std::to_string(idx) + ")"
                                           : "b'_" + std::to_string(ell) + "(" +
                                                 std::to_string(idx) + ") != b_" +
                                                 std::to_string(ell) + "(" + std::to_string(n) +
                                                 ") mod 2";
      break;
    }
  }
  if (report.passed) {
    const VerificationReport sellers = verify_sellers(ell, bound);
    if (!sellers.passed) {
      report.passed = false;
      report.witness = sellers.witness;
      report.detail = sellers.detail;
    } else {
      report.detail = "offset " + std::to_string(offset) + ", 0 <= n < " + std::to_string(bound) +
                      "; sellers: " + sellers.detail;
    }
  }
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace qcong
