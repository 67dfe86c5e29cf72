#pragma once

// Reference computations for the tests.  These deliberately avoid the
// library: dense products, brute-force enumeration, and textbook formulas.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Poly = std::vector<mpz_class>;

inline Poly one(std::size_t n) {
  Poly p(n);
  p[0] = 1;
  return p;
}

inline Poly times(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Poly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// In place multiplication by (1 + s q^k).
inline void times_binomial(Poly& p, std::size_t k, long s) {
  for (std::size_t i = p.size(); i-- > k;) {
    p[i] += s * p[i - k];
  }
}

// prod_{j >= 0} (1 - q^{a + j b}) to n terms, one binomial at a time.
inline Poly pochhammer_dense(std::uint64_t a, std::uint64_t b, std::size_t n) {
  Poly p = one(n);
  for (std::uint64_t k = a; k < n; k += b) {
    times_binomial(p, k, -1);
  }
  return p;
}

// 1 / p by long division (p[0] = 1).
inline Poly reciprocal(const Poly& p) {
  Poly out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    mpz_class s = k == 0 ? 1 : 0;
    for (std::size_t j = 1; j <= k; ++j) {
      s -= p[j] * out[k - j];
    }
    out[k] = s;
  }
  return out;
}

// sum over k in Z of (-1)^k q^{A k(k+1)/2 + B k(k-1)/2}, by direct enumeration.
inline Poly bilateral(std::int64_t A, std::int64_t B, std::size_t n) {
  Poly p(n);
  for (std::int64_t k = -2000; k <= 2000; ++k) {
    const std::int64_t e = A * k * (k + 1) / 2 + B * k * (k - 1) / 2;
    if (e >= 0 && e < static_cast<std::int64_t>(n)) {
      p[e] += (k % 2 == 0) ? 1 : -1;
    }
  }
  return p;
}

// Partitions of n enumerated explicitly (parts nonincreasing).
inline void each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      f(parts);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

inline long brute_bprime(int ell, int n) {
  long count = 0;
  each_partition(n, [&](const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] % ell == 0 || (i > 0 && parts[i] == parts[i - 1])) {
        return;
      }
    }
    ++count;
  });
  return count;
}

inline long brute_regular(int ell, int n) {
  long count = 0;
  each_partition(n, [&](const std::vector<int>& parts) {
    if (std::none_of(parts.begin(), parts.end(), [&](int p) { return p % ell == 0; })) {
      ++count;
    }
  });
  return count;
}

inline long brute_odd_regular(int ell, int n) {
  long count = 0;
  each_partition(n, [&](const std::vector<int>& parts) {
    if (std::all_of(parts.begin(), parts.end(), [&](int p) { return p % 2 == 1 && p % ell != 0; })) {
      ++count;
    }
  });
  return count;
}

inline long brute_self_conjugate(int n) {
  long count = 0;
  each_partition(n, [&](const std::vector<int>& parts) {
    std::vector<int> conj(parts.empty() ? 0 : parts[0], 0);
    for (int p : parts) {
      for (int i = 0; i < p; ++i) {
        ++conj[i];
      }
    }
    if (conj == parts) {
      ++count;
    }
  });
  return count;
}

// Kronecker symbol from its definition: factor n, use Euler's criterion by
// brute-force squaring for odd primes, the mod-8 rule at 2, sign rule at -1.
inline int legendre_brute(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) {
    return 0;
  }
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == r) {
      return 1;
    }
  }
  return -1;
}

inline int kronecker_brute(std::int64_t a, std::int64_t n) {
  if (n == 0) {
    return (a == 1 || a == -1) ? 1 : 0;
  }
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) {
      result = -result;
    }
  }
  for (std::int64_t p = 2; n > 1; ++p) {
    while (n % p == 0) {
      n /= p;
      if (p == 2) {
        if (a % 2 == 0) {
          return 0;
        }
        const std::int64_t r = ((a % 8) + 8) % 8;
        result *= (r == 1 || r == 7) ? 1 : -1;
      } else {
        result *= legendre_brute(a, p);
      }
    }
  }
  return result;
}

}  // namespace oracle
