#pragma once

// Expansions of the infinite products used throughout: Pochhammer symbols
// (q^a; q^b)_inf, Ramanujan's theta function f(-q^A, -q^B), and the
// Rogers-Ramanujan quotient R(q).

#include <cstdint>
#include <string>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

/// (sign q^a; q^b)_inf ^ e, where sign is -1 when `negated` is set.
struct PochhammerFactor {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::int64_t e = 1;
  bool negated = false;

  friend bool operator==(const PochhammerFactor&, const PochhammerFactor&) = default;
};

class QProduct {
 public:
  QProduct() = default;
  /// Throws SeriesError if some a or b is zero.
  explicit QProduct(std::vector<PochhammerFactor> factors);

  const std::vector<PochhammerFactor>& factors() const { return factors_; }
  /// Concatenation of factor lists, i.e. the product.
  QProduct operator*(const QProduct& other) const;

 private:
  std::vector<PochhammerFactor> factors_;
};

/// (q^d; q^d)_inf built from Euler's pentagonal number theorem (sparse).
Series euler_pentagonal(std::uint64_t d, std::size_t trunc, CoeffMode mode = CoeffMode::exact());

/// (q^a; q^b)_inf ^ e by multiplying out the binomials (1 - q^{a+kb}) one at a time.
Series pochhammer_product(std::uint64_t a, std::uint64_t b, std::int64_t e, std::size_t trunc,
                          CoeffMode mode = CoeffMode::exact());

/// (q^a; q^b)_inf ^ e.  Uses the pentagonal series when a == b.
Series pochhammer(std::uint64_t a, std::uint64_t b, std::int64_t e, std::size_t trunc,
                  CoeffMode mode = CoeffMode::exact());

/// (-q^a; q^b)_inf ^ e = ((q^{2a}; q^{2b}) / (q^a; q^b))^e.
Series pochhammer_negated(std::uint64_t a, std::uint64_t b, std::int64_t e, std::size_t trunc,
                          CoeffMode mode = CoeffMode::exact());

Series expand_qproduct(const QProduct& p, std::size_t trunc, CoeffMode mode = CoeffMode::exact());

/// f(-q^A, -q^B) = (q^A; q^{A+B}) (q^B; q^{A+B}) (q^{A+B}; q^{A+B}).
Series theta_f(std::uint64_t a, std::uint64_t b, std::size_t trunc,
               CoeffMode mode = CoeffMode::exact());

/// f(-q^A, -q^B) summed directly: sum over k in Z of (-1)^k q^{A k(k+1)/2 + B k(k-1)/2}.
Series theta_bilateral_sum(std::uint64_t a, std::uint64_t b, std::size_t trunc,
                           CoeffMode mode = CoeffMode::exact());

/// R(q) = (q; q^5)(q^4; q^5) / ((q^2; q^5)(q^3; q^5)).
Series rr_quotient(std::size_t trunc, CoeffMode mode = CoeffMode::exact());

}  // namespace qcong
