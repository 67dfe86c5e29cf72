#include "qcong/series.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "qcong/config.hpp"
#include "ntt.hpp"

namespace qcong {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

void require_same_mode(const Series& a, const Series& b, const char* op) {
  if (a.mode() != b.mode()) {
    throw SeriesError(std::string(op) + ": operands have different coefficient modes");
  }
}

u32 residue_of(const Integer& c, u32 m) {
  Integer r = c % m;
  if (r < 0) {
    r += m;
  }
  return static_cast<u32>(r.get_ui());
}

// Number of products (< (M-1)^2 each) that can be added to a value < M
// without overflowing 64 bits.
u64 accumulation_headroom(u32 m) {
  const u64 top = static_cast<u64>(m - 1) * static_cast<u64>(m - 1);
  if (top == 0) {
    return std::numeric_limits<u64>::max();
  }
  return (std::numeric_limits<u64>::max() - m) / top;
}

// Above this many word operations a transform-based product is cheaper.
constexpr long double kNttCutover = 3e7;

bool prefer_ntt(long double direct_cost, std::size_t n) {
  return direct_cost > kNttCutover && 2 * n <= detail::kMaxNttLength;
}

std::optional<u32> inverse_mod(u32 a, u32 m) {
  long long t = 0;
  long long new_t = 1;
  long long r = m;
  long long new_r = a % m;
  while (new_r != 0) {
    const long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) {
    return std::nullopt;
  }
  if (t < 0) {
    t += m;
  }
  return static_cast<u32>(t);
}

template <class T>
std::vector<std::size_t> nonzero_positions(std::span<const T> v, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<Integer> exact_mul(std::span<const Integer> a, std::span<const Integer> b,
                               std::size_t n) {
  std::vector<Integer> out(n);
  auto nz_a = nonzero_positions(a, n);
  auto nz_b = nonzero_positions(b, n);
  auto outer = a;
  auto inner = b;
  if (nz_a.size() > nz_b.size()) {
    std::swap(nz_a, nz_b);
    std::swap(outer, inner);
  }
  for (std::size_t i : nz_a) {
    const mpz_srcptr ci = outer[i].get_mpz_t();
    for (std::size_t j : nz_b) {
      if (i + j >= n) {
        break;
      }
      mpz_addmul(out[i + j].get_mpz_t(), ci, inner[j].get_mpz_t());
    }
  }
  return out;
}

std::vector<u32> modular_mul(std::span<const u32> a, std::span<const u32> b, std::size_t n,
                             u32 m) {
  auto nz_a = nonzero_positions(a, n);
  auto nz_b = nonzero_positions(b, n);
  auto sparse = a;
  auto other = b;
  if (nz_a.size() > nz_b.size()) {
    std::swap(nz_a, nz_b);
    std::swap(sparse, other);
  }
  const u64 headroom = accumulation_headroom(m);
  std::vector<u64> acc(n, 0);
  const long double scatter_cost = static_cast<long double>(nz_a.size()) * nz_b.size();
  const long double sweep_cost = static_cast<long double>(nz_a.size()) * n;
  if (prefer_ntt(std::min(scatter_cost, sweep_cost), n)) {
    return detail::ntt_multiply(a.first(n), b.first(n), n, m);
  }

  if (scatter_cost <= sweep_cost) {
    const bool reduce_each = nz_a.size() >= headroom;
    for (std::size_t i : nz_a) {
      const u64 ci = sparse[i];
      for (std::size_t j : nz_b) {
        if (i + j >= n) {
          break;
        }
        acc[i + j] += ci * other[j];
        if (reduce_each) {
          acc[i + j] %= m;
        }
      }
    }
  } else {
    u64 passes = 0;
    const u32* src = other.data();
    for (std::size_t i : nz_a) {
      const u64 ci = sparse[i];
      u64* dst = acc.data() + i;
      const std::size_t len = n - i;
      for (std::size_t j = 0; j < len; ++j) {
        dst[j] += ci * src[j];
      }
      if (++passes == headroom) {
        for (auto& x : acc) {
          x %= m;
        }
        passes = 0;
      }
    }
  }
  std::vector<u32> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<u32>(acc[i] % m);
  }
  return out;
}

std::vector<Integer> exact_divide(std::span<const Integer> num, std::span<const Integer> den,
                                  std::size_t n) {
  const Integer& lead = den[0];
  if (lead != 1 && lead != -1) {
    throw SeriesError("constant term of the divisor is not a unit");
  }
  const bool negate = lead < 0;
  std::vector<std::size_t> nz;
  for (std::size_t e = 1; e < n; ++e) {
    if (den[e] != 0) {
      nz.push_back(e);
    }
  }
  std::vector<Integer> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Integer s = num[k];
    for (std::size_t e : nz) {
      if (e > k) {
        break;
      }
      mpz_submul(s.get_mpz_t(), den[e].get_mpz_t(), out[k - e].get_mpz_t());
    }
    if (negate) {
      mpz_neg(s.get_mpz_t(), s.get_mpz_t());
    }
    out[k] = std::move(s);
  }
  return out;
}

// Blocked sparse division.  Divisor terms q^e with e >= kBlock only read
// finished output from earlier blocks, so they are applied as contiguous
// sweeps; the short-range terms are resolved one coefficient at a time.
std::vector<u32> modular_divide(std::span<const u32> num, std::span<const u32> den,
                                std::size_t n, u32 m) {
  constexpr std::size_t kBlock = 2048;
  const auto lead_inv = inverse_mod(den[0], m);
  if (!lead_inv) {
    throw SeriesError("constant term of the divisor is not invertible modulo " +
                      std::to_string(m));
  }
  const u64 unit = *lead_inv;
  std::vector<std::pair<std::size_t, u64>> near;
  std::vector<std::pair<std::size_t, u64>> far;
  for (std::size_t e = 1; e < n; ++e) {
    if (den[e] != 0) {
      const u64 negated = m - den[e];
      (e < kBlock ? near : far).emplace_back(e, negated);
    }
  }
  if (prefer_ntt(static_cast<long double>(near.size() + far.size()) * n, n)) {
    const auto inverse = detail::ntt_inverse(den.first(n), n, m, static_cast<u32>(unit));
    return detail::ntt_multiply(num.first(n), inverse, n, m);
  }
  const u64 headroom = accumulation_headroom(m);
  const bool near_reduce_each = near.size() >= headroom;

  std::vector<u64> acc(num.begin(), num.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<u32> out(n, 0);
  for (std::size_t begin = 0; begin < n; begin += kBlock) {
    const std::size_t end = std::min(n, begin + kBlock);
    u64 passes = 0;
    for (const auto& [e, c] : far) {
      if (e >= end) {
        break;
      }
      const std::size_t from = std::max(begin, e);
      u64* dst = acc.data();
      const u32* src = out.data() + (from - e);
      for (std::size_t k = from; k < end; ++k) {
        dst[k] += c * src[k - from];
      }
      if (++passes == headroom) {
        for (std::size_t k = begin; k < end; ++k) {
          acc[k] %= m;
        }
        passes = 0;
      }
    }
    for (std::size_t k = begin; k < end; ++k) {
      u64 s = acc[k] % m;
      for (const auto& [e, c] : near) {
        if (e > k) {
          break;
        }
        s += c * out[k - e];
        if (near_reduce_each) {
          s %= m;
        }
      }
      out[k] = static_cast<u32>((s % m) * unit % m);
    }
  }
  return out;
}

}  // namespace

CoeffMode CoeffMode::modular(std::uint64_t m) {
  if (m < 2 || m > kMaxModulus) {
    throw SeriesError("modulus must lie in [2, 2^31], got " + std::to_string(m));
  }
  return CoeffMode{static_cast<std::uint32_t>(m)};
}

Series::Series(std::vector<Integer> coeffs, std::size_t trunc)
    : trunc_(trunc), mode_(CoeffMode::exact()), exact_(std::move(coeffs)) {
  if (trunc == 0) {
    throw SeriesError("truncation order must be positive");
  }
  if (exact_.size() > trunc) {
    throw SeriesError("more coefficients than the truncation order");
  }
  exact_.resize(trunc);
}

Series::Series(std::vector<std::uint32_t> residues, std::size_t trunc, CoeffMode mode)
    : trunc_(trunc), mode_(mode), residues_(std::move(residues)) {
  if (trunc == 0) {
    throw SeriesError("truncation order must be positive");
  }
  if (mode.is_exact()) {
    throw SeriesError("residue constructor needs a modular coefficient mode");
  }
  if (residues_.size() > trunc) {
    throw SeriesError("more coefficients than the truncation order");
  }
  for (auto r : residues_) {
    if (r >= mode.modulus()) {
      throw SeriesError("residue out of range for the modulus");
    }
  }
  residues_.resize(trunc, 0);
}

Series Series::zero(std::size_t trunc, CoeffMode mode) {
  if (mode.is_exact()) {
    return Series(std::vector<Integer>{}, trunc);
  }
  return Series(std::vector<u32>{}, trunc, mode);
}

Series Series::constant(const Integer& c, std::size_t trunc, CoeffMode mode) {
  return monomial(0, trunc, mode, c);
}

Series Series::monomial(std::size_t k, std::size_t trunc, CoeffMode mode, const Integer& c) {
  Series s = zero(trunc, mode);
  if (k < trunc) {
    if (mode.is_exact()) {
      s.exact_[k] = c;
    } else {
      s.residues_[k] = residue_of(c, mode.modulus());
    }
  }
  return s;
}

Integer Series::coeff(std::size_t n) const {
  if (n >= trunc_) {
    throw std::out_of_range("coefficient " + std::to_string(n) +
                            " requested beyond truncation order " + std::to_string(trunc_));
  }
  if (is_exact()) {
    return exact_[n];
  }
  return Integer(static_cast<unsigned long>(residues_[n]));
}

bool Series::is_zero_at(std::size_t n) const {
  if (n >= trunc_) {
    throw std::out_of_range("coefficient index beyond truncation order");
  }
  return is_exact() ? exact_[n] == 0 : residues_[n] == 0;
}

std::size_t Series::nonzero_count() const {
  if (is_exact()) {
    return static_cast<std::size_t>(
        std::count_if(exact_.begin(), exact_.end(), [](const Integer& c) { return c != 0; }));
  }
  return static_cast<std::size_t>(
      std::count_if(residues_.begin(), residues_.end(), [](u32 c) { return c != 0; }));
}

std::span<const Integer> Series::exact_coeffs() const {
  if (!is_exact()) {
    throw SeriesError("exact coefficients requested from a modular series");
  }
  return exact_;
}

std::span<const std::uint32_t> Series::residues() const {
  if (is_exact()) {
    throw SeriesError("residues requested from an exact series");
  }
  return residues_;
}

Series Series::truncated(std::size_t n) const {
  if (n == 0 || n > trunc_) {
    throw SeriesError("truncated(): order must lie in [1, trunc]");
  }
  if (is_exact()) {
    return Series(std::vector<Integer>(exact_.begin(), exact_.begin() + static_cast<long>(n)), n);
  }
  return Series(std::vector<u32>(residues_.begin(), residues_.begin() + static_cast<long>(n)), n,
                mode_);
}

bool operator==(const Series& a, const Series& b) {
  return a.mode() == b.mode() && compare(a, b).equal();
}

Series make_series(std::vector<Integer> coeffs, std::size_t trunc) {
  return Series(std::move(coeffs), trunc);
}

Series make_series(std::initializer_list<long> coeffs, std::size_t trunc) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) {
    v.emplace_back(c);
  }
  return Series(std::move(v), trunc);
}

namespace {

template <class ExactOp, class ModOp>
Series combine(const Series& a, const Series& b, const char* name, ExactOp exact_op, ModOp mod_op) {
  require_same_mode(a, b, name);
  const std::size_t n = std::min(a.trunc(), b.trunc());
  if (a.is_exact()) {
    auto x = a.exact_coeffs();
    auto y = b.exact_coeffs();
    std::vector<Integer> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = exact_op(x[i], y[i]);
    }
    return Series(std::move(out), n);
  }
  const u32 m = a.mode().modulus();
  auto x = a.residues();
  auto y = b.residues();
  std::vector<u32> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = mod_op(x[i], y[i], m);
  }
  return Series(std::move(out), n, a.mode());
}

}  // namespace

Series add(const Series& a, const Series& b) {
  return combine(
      a, b, "add", [](const Integer& x, const Integer& y) { return Integer(x + y); },
      [](u32 x, u32 y, u32 m) { return static_cast<u32>((u64{x} + y) % m); });
}

Series sub(const Series& a, const Series& b) {
  return combine(
      a, b, "sub", [](const Integer& x, const Integer& y) { return Integer(x - y); },
      [](u32 x, u32 y, u32 m) { return static_cast<u32>((u64{x} + m - y) % m); });
}

Series neg(const Series& a) {
  if (a.is_exact()) {
    std::vector<Integer> out(a.exact_coeffs().begin(), a.exact_coeffs().end());
    for (auto& c : out) {
      c = -c;
    }
    return Series(std::move(out), a.trunc());
  }
  const u32 m = a.mode().modulus();
  std::vector<u32> out(a.residues().begin(), a.residues().end());
  for (auto& c : out) {
    c = c == 0 ? 0 : m - c;
  }
  return Series(std::move(out), a.trunc(), a.mode());
}

Series scale(const Series& a, const Integer& c) {
  if (a.is_exact()) {
    std::vector<Integer> out(a.exact_coeffs().begin(), a.exact_coeffs().end());
    for (auto& x : out) {
      x *= c;
    }
    return Series(std::move(out), a.trunc());
  }
  const u32 m = a.mode().modulus();
  const u64 k = residue_of(c, m);
  std::vector<u32> out(a.residues().begin(), a.residues().end());
  for (auto& x : out) {
    x = static_cast<u32>(x * k % m);
  }
  return Series(std::move(out), a.trunc(), a.mode());
}

Series shift(const Series& a, std::size_t k) {
  const std::size_t n = a.trunc() + k;
  if (a.is_exact()) {
    std::vector<Integer> out(n);
    std::copy(a.exact_coeffs().begin(), a.exact_coeffs().end(), out.begin() + static_cast<long>(k));
    return Series(std::move(out), n);
  }
  std::vector<u32> out(n, 0);
  std::copy(a.residues().begin(), a.residues().end(), out.begin() + static_cast<long>(k));
  return Series(std::move(out), n, a.mode());
}

Series mul(const Series& a, const Series& b) {
  require_same_mode(a, b, "mul");
  const std::size_t n = std::min(a.trunc(), b.trunc());
  if (a.is_exact()) {
    return Series(exact_mul(a.exact_coeffs(), b.exact_coeffs(), n), n);
  }
  return Series(modular_mul(a.residues(), b.residues(), n, a.mode().modulus()), n, a.mode());
}

Series divide(const Series& num, const Series& den) {
  require_same_mode(num, den, "divide");
  const std::size_t n = std::min(num.trunc(), den.trunc());
  if (num.is_exact()) {
    return Series(exact_divide(num.exact_coeffs(), den.exact_coeffs(), n), n);
  }
  return Series(modular_divide(num.residues(), den.residues(), n, num.mode().modulus()), n,
                num.mode());
}

Series invert(const Series& a) { return divide(Series::constant(1, a.trunc(), a.mode()), a); }

Series pow(const Series& a, long long e) {
  if (e < 0) {
    return invert(pow(a, -e));
  }
  Series result = Series::constant(1, a.trunc(), a.mode());
  Series base = a;
  auto k = static_cast<unsigned long long>(e);
  while (k != 0) {
    if (k & 1ULL) {
      result = mul(result, base);
    }
    k >>= 1ULL;
    if (k != 0) {
      base = mul(base, base);
    }
  }
  return result;
}

Series substitute_power(const Series& a, std::size_t m) {
  if (m == 0) {
    throw SeriesError("substitute_power: exponent multiplier must be positive");
  }
  const std::size_t cap = std::max(config::max_truncation(), a.trunc());
  const std::size_t n = (a.trunc() > cap / m) ? cap : std::min(cap, a.trunc() * m);
  if (a.is_exact()) {
    std::vector<Integer> out(n);
    auto src = a.exact_coeffs();
    for (std::size_t i = 0; i * m < n; ++i) {
      out[i * m] = src[i];
    }
    return Series(std::move(out), n);
  }
  std::vector<u32> out(n, 0);
  auto src = a.residues();
  for (std::size_t i = 0; i * m < n; ++i) {
    out[i * m] = src[i];
  }
  return Series(std::move(out), n, a.mode());
}

Series dissect(const Series& a, std::size_t t, std::size_t j) {
  if (t == 0 || j >= t) {
    throw SeriesError("dissect: need t >= 1 and 0 <= j < t");
  }
  if (j >= a.trunc()) {
    throw SeriesError("dissect: truncation order " + std::to_string(a.trunc()) +
                      " leaves no coefficients in class " + std::to_string(j) + " mod " +
                      std::to_string(t));
  }
  const std::size_t n = (a.trunc() - j + t - 1) / t;
  if (a.is_exact()) {
    std::vector<Integer> out(n);
    auto src = a.exact_coeffs();
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = src[t * i + j];
    }
    return Series(std::move(out), n);
  }
  std::vector<u32> out(n);
  auto src = a.residues();
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = src[t * i + j];
  }
  return Series(std::move(out), n, a.mode());
}

Series reduce_mod(const Series& a, std::uint64_t m) {
  if (m < 2) {
    throw SeriesError("reduce_mod: modulus must be at least 2");
  }
  const CoeffMode mode = CoeffMode::modular(m);
  if (!a.is_exact()) {
    if (a.mode().modulus() % m != 0) {
      throw SeriesError("reduce_mod: " + std::to_string(m) + " does not divide the modulus " +
                        std::to_string(a.mode().modulus()));
    }
    std::vector<u32> out(a.residues().begin(), a.residues().end());
    for (auto& r : out) {
      r %= static_cast<u32>(m);
    }
    return Series(std::move(out), a.trunc(), mode);
  }
  std::vector<u32> out(a.trunc());
  auto src = a.exact_coeffs();
  for (std::size_t i = 0; i < a.trunc(); ++i) {
    out[i] = residue_of(src[i], mode.modulus());
  }
  return Series(std::move(out), a.trunc(), mode);
}

Integer coeff(const Series& a, std::size_t n) { return a.coeff(n); }

Agreement compare(const Series& a, const Series& b) {
  require_same_mode(a, b, "compare");
  Agreement result;
  result.compared = std::min(a.trunc(), b.trunc());
  if (a.is_exact()) {
    auto x = a.exact_coeffs();
    auto y = b.exact_coeffs();
    for (std::size_t i = 0; i < result.compared; ++i) {
      if (x[i] != y[i]) {
        result.first_mismatch = i;
        break;
      }
    }
  } else {
    auto x = a.residues();
    auto y = b.residues();
    for (std::size_t i = 0; i < result.compared; ++i) {
      if (x[i] != y[i]) {
        result.first_mismatch = i;
        break;
      }
    }
  }
  return result;
}

}  // namespace qcong
