#include "qcong/qfactory.hpp"

#include <stdexcept>

namespace qcong {
namespace {

void require_positive(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) {
    throw SeriesError("Pochhammer parameters a and b must be positive");
  }
}

Series raise(const Series& base, std::int64_t e) {
  if (e == 1) {
    return base;
  }
  if (e >= 0) {
    return pow(base, e);
  }
  return invert(pow(base, -e));
}

}  // namespace

QProduct::QProduct(std::vector<PochhammerFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    require_positive(f.a, f.b);
  }
}

QProduct QProduct::operator*(const QProduct& other) const {
  std::vector<PochhammerFactor> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return QProduct(std::move(all));
}

// Exponents d k(3k-1)/2 and d k(3k+1)/2 for k >= 1, both with sign (-1)^k.
Series euler_pentagonal(std::uint64_t d, std::size_t trunc, CoeffMode mode) {
  require_positive(d, d);
  std::vector<Integer> coeffs(trunc);
  coeffs[0] = 1;
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t lo = d * (k * (3 * k - 1) / 2);
    if (lo >= trunc) {
      break;
    }
    const long sign = (k % 2 == 0) ? 1 : -1;
    coeffs[lo] += sign;
    const std::uint64_t hi = lo + d * k;
    if (hi < trunc) {
      coeffs[hi] += sign;
    }
  }
  Series s(std::move(coeffs), trunc);
  return mode.is_exact() ? s : reduce_mod(s, mode.modulus());
}

Series pochhammer_product(std::uint64_t a, std::uint64_t b, std::int64_t e, std::size_t trunc,
                          CoeffMode mode) {
  require_positive(a, b);
  if (e == 0) {
    return Series::constant(1, trunc, mode);
  }
  Series base = Series::constant(1, trunc, mode);
  if (mode.is_exact()) {
    std::vector<Integer> c(base.exact_coeffs().begin(), base.exact_coeffs().end());
    for (std::uint64_t m = a; m < trunc; m += b) {
      for (std::size_t n = trunc - 1; n >= m; --n) {
        c[n] -= c[n - m];
      }
    }
    base = Series(std::move(c), trunc);
  } else {
    const std::uint32_t mod = mode.modulus();
    std::vector<std::uint32_t> c(base.residues().begin(), base.residues().end());
    for (std::uint64_t m = a; m < trunc; m += b) {
      for (std::size_t n = trunc - 1; n >= m; --n) {
        c[n] = static_cast<std::uint32_t>((std::uint64_t{c[n]} + mod - c[n - m]) % mod);
      }
    }
    base = Series(std::move(c), trunc, mode);
  }
  return raise(base, e);
}

Series pochhammer(std::uint64_t a, std::uint64_t b, std::int64_t e, std::size_t trunc,
                  CoeffMode mode) {
  require_positive(a, b);
  if (e == 0) {
    return Series::constant(1, trunc, mode);
  }
  if (a == b) {
    return raise(euler_pentagonal(a, trunc, mode), e);
  }
  return pochhammer_product(a, b, e, trunc, mode);
}

Series pochhammer_negated(std::uint64_t a, std::uint64_t b, std::int64_t e, std::size_t trunc,
                          CoeffMode mode) {
  require_positive(a, b);
  if (e == 0) {
    return Series::constant(1, trunc, mode);
  }
  const Series base = divide(pochhammer(2 * a, 2 * b, 1, trunc, mode), pochhammer(a, b, 1, trunc, mode));
  return raise(base, e);
}

Series expand_qproduct(const QProduct& p, std::size_t trunc, CoeffMode mode) {
  Series numerator = Series::constant(1, trunc, mode);
  Series denominator = Series::constant(1, trunc, mode);
  bool has_denominator = false;
  for (const auto& f : p.factors()) {
    if (f.e == 0) {
      continue;
    }
    const std::int64_t magnitude = f.e < 0 ? -f.e : f.e;
    const Series factor = f.negated ? pochhammer_negated(f.a, f.b, magnitude, trunc, mode)
                                    : pochhammer(f.a, f.b, magnitude, trunc, mode);
    if (f.e > 0) {
      numerator = mul(numerator, factor);
    } else if (mode.is_exact()) {
      // Exact division costs one pass per divisor term, so sparse factors
      // are cheaper one at a time than as a denser product.
      numerator = divide(numerator, factor);
    } else {
      denominator = mul(denominator, factor);
      has_denominator = true;
    }
  }
  return has_denominator ? divide(numerator, denominator) : numerator;
}

Series theta_f(std::uint64_t a, std::uint64_t b, std::size_t trunc, CoeffMode mode) {
  require_positive(a, b);
  const std::uint64_t ab = a + b;
  return mul(mul(pochhammer(a, ab, 1, trunc, mode), pochhammer(b, ab, 1, trunc, mode)),
             pochhammer(ab, ab, 1, trunc, mode));
}

Series theta_bilateral_sum(std::uint64_t a, std::uint64_t b, std::size_t trunc, CoeffMode mode) {
  require_positive(a, b);
  std::vector<Integer> coeffs(trunc);
  // k >= 0 gives exponent a k(k+1)/2 + b k(k-1)/2; k = -m (m >= 1) gives
  // a m(m-1)/2 + b m(m+1)/2.  Both grow monotonically in |k|.
  for (std::uint64_t k = 0;; ++k) {
    const std::uint64_t exponent = a * (k * (k + 1) / 2) + b * (k * (k - 1) / 2);
    if (exponent >= trunc) {
      break;
    }
    coeffs[exponent] += (k % 2 == 0) ? 1 : -1;
  }
  for (std::uint64_t m = 1;; ++m) {
    const std::uint64_t exponent = a * (m * (m - 1) / 2) + b * (m * (m + 1) / 2);
    if (exponent >= trunc) {
      break;
    }
    coeffs[exponent] += (m % 2 == 0) ? 1 : -1;
  }
  Series s(std::move(coeffs), trunc);
  return mode.is_exact() ? s : reduce_mod(s, mode.modulus());
}

Series rr_quotient(std::size_t trunc, CoeffMode mode) {
  const Series num = mul(pochhammer(1, 5, 1, trunc, mode), pochhammer(4, 5, 1, trunc, mode));
  const Series den = mul(pochhammer(2, 5, 1, trunc, mode), pochhammer(3, 5, 1, trunc, mode));
  return divide(num, den);
}

}  // namespace qcong
