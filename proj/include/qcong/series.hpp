#pragma once

// Truncated power series over Z or Z/MZ.
//
// A Series holds the coefficients a(0), ..., a(N-1) of some formal power
// series; N is the truncation order and nothing is known about a(n) for
// n >= N.  Every operation returns the largest truncation order that its
// inputs still determine.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qcong {

using Integer = mpz_class;

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient domain: exact integers or residues in [0, M).
class CoeffMode {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  static constexpr CoeffMode exact() { return CoeffMode{0}; }
  /// Throws SeriesError unless 2 <= m <= kMaxModulus.
  static CoeffMode modular(std::uint64_t m);

  constexpr bool is_exact() const { return modulus_ == 0; }
  /// Zero in exact mode.
  constexpr std::uint32_t modulus() const { return modulus_; }

  friend constexpr bool operator==(CoeffMode, CoeffMode) = default;

 private:
  explicit constexpr CoeffMode(std::uint32_t m) : modulus_(m) {}
  std::uint32_t modulus_;
};

class Series {
 public:
  /// Exact series; coeffs are zero-padded to trunc.
  Series(std::vector<Integer> coeffs, std::size_t trunc);
  /// Modular series from residues (each must already lie in [0, M)).
  Series(std::vector<std::uint32_t> residues, std::size_t trunc, CoeffMode mode);

  static Series zero(std::size_t trunc, CoeffMode mode = CoeffMode::exact());
  static Series constant(const Integer& c, std::size_t trunc,
                         CoeffMode mode = CoeffMode::exact());
  /// c * q^k, truncated at trunc (zero if k >= trunc).
  static Series monomial(std::size_t k, std::size_t trunc, CoeffMode mode = CoeffMode::exact(),
                         const Integer& c = 1);

  std::size_t trunc() const { return trunc_; }
  CoeffMode mode() const { return mode_; }
  bool is_exact() const { return mode_.is_exact(); }

  /// a(n); residues are returned in [0, M). Throws std::out_of_range for n >= trunc.
  Integer coeff(std::size_t n) const;
  bool is_zero_at(std::size_t n) const;
  std::size_t nonzero_count() const;

  std::span<const Integer> exact_coeffs() const;
  std::span<const std::uint32_t> residues() const;

  /// Prefix of length n (1 <= n <= trunc).
  Series truncated(std::size_t n) const;

  /// Same mode and equal on the common prefix.
  friend bool operator==(const Series& a, const Series& b);

 private:
  std::size_t trunc_;
  CoeffMode mode_;
  std::vector<Integer> exact_;
  std::vector<std::uint32_t> residues_;
};

Series make_series(std::vector<Integer> coeffs, std::size_t trunc);
Series make_series(std::initializer_list<long> coeffs, std::size_t trunc);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series scale(const Series& a, const Integer& c);
/// Multiplication by q^k; truncation grows by k.
Series shift(const Series& a, std::size_t k);

/// Cauchy product truncated at min(trunc_a, trunc_b).
Series mul(const Series& a, const Series& b);
/// Requires a unit constant term (+-1 exact, invertible mod M).
Series invert(const Series& a);
/// num * invert(den) in a single pass.
Series divide(const Series& num, const Series& den);
Series pow(const Series& a, long long e);

/// q -> q^m.  Output truncation is trunc*m, capped at config::max_truncation()
/// but never below trunc.
Series substitute_power(const Series& a, std::size_t m);
/// Coefficients a(t n + j); truncation ceil((trunc - j) / t).
Series dissect(const Series& a, std::size_t t, std::size_t j);
/// Exact (or modular with M | current modulus) to residues mod M.
Series reduce_mod(const Series& a, std::uint64_t m);

Integer coeff(const Series& a, std::size_t n);

/// Result of a coefficient-wise comparison over the common prefix.
struct Agreement {
  std::size_t compared = 0;
  std::optional<std::size_t> first_mismatch;
  bool equal() const { return !first_mismatch.has_value(); }
};

Agreement compare(const Series& a, const Series& b);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Integer& c, const Series& a) { return scale(a, c); }

}  // namespace qcong
