#include "ntt.hpp"

#include <algorithm>
#include <array>

namespace qcong::detail {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u32, 3> kPrimes = {998244353u, 167772161u, 469762049u};
constexpr u32 kRoot = 3;

u64 power(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e != 0) {
    if (e & 1) {
      r = r * b % p;
    }
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void transform(std::vector<u32>& a, u32 p, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) {
      j ^= bit;
    }
    j ^= bit;
    if (i < j) {
      std::swap(a[i], a[j]);
    }
  }
  std::vector<u32> w;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    u64 step = power(kRoot, (p - 1) / len, p);
    if (inverse) {
      step = power(step, p - 2, p);
    }
    const std::size_t half = len / 2;
    w.assign(half, 1);
    for (std::size_t k = 1; k < half; ++k) {
      w[k] = static_cast<u32>(u64{w[k - 1]} * step % p);
    }
    for (std::size_t i = 0; i < n; i += len) {
      u32* lo = a.data() + i;
      u32* hi = lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        const u32 x = lo[k];
        const u32 y = static_cast<u32>(u64{hi[k]} * w[k] % p);
        lo[k] = x + y >= p ? x + y - p : x + y;
        hi[k] = x >= y ? x - y : x + p - y;
      }
    }
  }
  if (inverse) {
    const u64 scale = power(n, p - 2, p);
    for (auto& x : a) {
      x = static_cast<u32>(x * scale % p);
    }
  }
}

std::vector<u32> convolve_prime(std::span<const u32> a, std::span<const u32> b, std::size_t n,
                                u32 p) {
  std::size_t size = 1;
  while (size < a.size() + b.size()) {
    size <<= 1;
  }
  std::vector<u32> fa(size, 0);
  std::vector<u32> fb(size, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    fa[i] = a[i] % p;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    fb[i] = b[i] % p;
  }
  transform(fa, p, false);
  transform(fb, p, false);
  for (std::size_t i = 0; i < size; ++i) {
    fa[i] = static_cast<u32>(u64{fa[i]} * fb[i] % p);
  }
  transform(fa, p, true);
  fa.resize(n);
  return fa;
}

}  // namespace

std::vector<u32> ntt_multiply(std::span<const u32> a, std::span<const u32> b, std::size_t n,
                              u32 m) {
  a = a.first(std::min(a.size(), n));
  b = b.first(std::min(b.size(), n));
  // Exact convolution values are below len * (m-1)^2; pick enough primes.
  const u128 bound = static_cast<u128>(std::min(a.size(), b.size()) + 1) * (m - 1) * (m - 1);
  std::size_t primes = 1;
  u128 capacity = kPrimes[0];
  while (capacity <= bound) {
    capacity *= kPrimes[primes++];
  }
  std::array<std::vector<u32>, 3> r;
  for (std::size_t i = 0; i < primes; ++i) {
    r[i] = convolve_prime(a, b, n, kPrimes[i]);
  }
  std::vector<u32> out(n);
  if (primes == 1) {
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = r[0][k] % m;
    }
    return out;
  }
  const u64 p0 = kPrimes[0];
  const u64 p1 = kPrimes[1];
  const u64 p2 = kPrimes[2];
  const u64 inv_p0_mod_p1 = power(p0, p1 - 2, p1);
  const u64 inv_p0p1_mod_p2 = power(p0 * p1 % p2, p2 - 2, p2);
  const u64 p0p1_mod_m = p0 * p1 % m;
  for (std::size_t k = 0; k < n; ++k) {
    const u64 x0 = r[0][k];
    const u64 x1 = (r[1][k] + p1 - x0 % p1) % p1 * inv_p0_mod_p1 % p1;
    u64 value = (x0 + p0 % m * x1) % m;
    if (primes == 3) {
      const u64 partial = (x0 + p0 * x1) % p2;
      const u64 x2 = (r[2][k] + p2 - partial) % p2 * inv_p0p1_mod_p2 % p2;
      value = (value + p0p1_mod_m * (x2 % m)) % m;
    }
    out[k] = static_cast<u32>(value);
  }
  return out;
}

std::vector<u32> ntt_inverse(std::span<const u32> a, std::size_t n, u32 m, u32 lead_inv) {
  std::vector<u32> g{lead_inv};
  std::size_t have = 1;
  while (have < n) {
    const std::size_t next = std::min(n, 2 * have);
    // g <- g (2 - a g) mod q^next
    std::vector<u32> e = ntt_multiply(a.first(std::min(a.size(), next)), g, next, m);
    for (auto& x : e) {
      x = x == 0 ? 0 : m - x;
    }
    e[0] = static_cast<u32>((u64{e[0]} + 2) % m);
    g = ntt_multiply(g, e, next, m);
    have = next;
  }
  g.resize(n, 0);
  return g;
}

}  // namespace qcong::detail
