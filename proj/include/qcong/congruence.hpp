#pragma once

// Bounded checks of arithmetic-progression congruences for b'_ell(n).
//
// Every check reports the exact range it covered; nothing here claims a
// congruence beyond the indices actually inspected.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qcong/report.hpp"
#include "qcong/series.hpp"

namespace qcong {

enum class ApSource { series, oracle, both };

std::string to_string(ApSource s);
ApSource ap_source_from_string(const std::string& s);

/// b'_ell(m n + r) = claimed (mod modulus) for 0 <= n < bound.
struct APAssertion {
  std::uint64_t m = 1;
  std::uint64_t r = 0;
  std::uint64_t modulus = 2;
  std::uint64_t claimed = 0;
  std::size_t bound = 0;
  ApSource source = ApSource::both;
  std::uint64_t ell = 5;

  /// Throws std::invalid_argument on r >= m, claimed >= modulus, or bound == 0.
  void validate() const;
  /// One past the largest index touched.
  std::size_t required_trunc() const;
};

/// ( 3/p ) != ( -5/p ).  Throws std::invalid_argument for p < 5 or composite p.
bool eligible_prime(std::uint64_t p);

VerificationReport verify_ap(const APAssertion& a);
/// Uses `residues` (generating function of b'_ell mod assertion.modulus) for
/// the series side.  Throws SeriesError if it is too short.
VerificationReport verify_ap(const APAssertion& a, const Series& residues);

/// b'_5(2n+1) is odd exactly when n = 15k^2 - 5k, for 0 <= n < bound.
VerificationReport verify_parity_characterization(std::size_t bound);
/// `bprime_mod2` must be the mod-2 generating function of b'_5 with at least 2*bound terms.
VerificationReport verify_parity_characterization(std::size_t bound, const Series& bprime_mod2);

/// Families b'_5(4 p^{2a}(5n+j) + (17 p^{2a}+1)/6), j in {1,3}, and
/// b'_5(4 p^{2a+1}(pn+j) + (17 p^{2a+2}+1)/6), 1 <= j < p, all = 0 mod 4,
/// for a <= alpha_max and every n < bound whose index lies below the
/// truncation of `bprime_mod4` (defaults to the global cap).
VerificationReport verify_thm12_families(std::uint64_t p, unsigned alpha_max, std::size_t bound);
VerificationReport verify_thm12_families(std::uint64_t p, unsigned alpha_max, std::size_t bound,
                                         const Series& bprime_mod4);

/// b'_5(5n+1) = b'_5(5^{2a+1} n + (5^{2a+1}+1)/6) mod 5 for a <= alpha_max.
/// With a bound, every n < bound must fit below the truncation (hard error
/// otherwise); without one, all n that fit are checked.
VerificationReport verify_internal_congruence(unsigned alpha_max, std::optional<std::size_t> bound,
                                              const Series& bprime_mod5);
VerificationReport verify_internal_congruence(unsigned alpha_max, std::size_t bound);

/// b'_ell(ell n + r) = 0 mod 2 for every 1 <= r < ell with 24r+1 a nonresidue mod ell.
VerificationReport verify_sellers(std::uint64_t ell, std::size_t bound);
/// b'_ell(ell n + (ell^2-1)/24) = b_ell(n) mod 2, together with verify_sellers.
VerificationReport verify_cuigu(std::uint64_t ell, std::size_t bound);

}  // namespace qcong
