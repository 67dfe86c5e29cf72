#include "qcong/number_theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qcong {

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) {
        out.push_back(n / d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("factorize(0)");
  }
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) {
    ++out[n];
  }
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  unsigned __int128 result = 1 % m;
  unsigned __int128 b = base % m;
  while (exp != 0) {
    if (exp & 1U) {
      result = result * b % m;
    }
    b = b * b % m;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre: " + std::to_string(p) + " is not an odd prime");
  }
  const auto sp = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
  if (r == 0) {
    return 0;
  }
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int kronecker(std::int64_t a, std::int64_t n) {
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
  // Factor out 2 from n using (a/2).
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) {
      return 0;
    }
    const std::int64_t a8 = ((a % 8) + 8) % 8;
    if (a8 == 3 || a8 == 5) {
      result = -result;
    }
  }
  // n is now odd and positive: Jacobi symbol.
  std::int64_t top = ((a % n) + n) % n;
  std::int64_t bottom = n;
  while (top != 0) {
    while (top % 2 == 0) {
      top /= 2;
      const std::int64_t b8 = bottom % 8;
      if (b8 == 3 || b8 == 5) {
        result = -result;
      }
    }
    std::swap(top, bottom);
    if (top % 4 == 3 && bottom % 4 == 3) {
      result = -result;
    }
    top %= bottom;
  }
  return bottom == 1 ? result : 0;
}

}  // namespace qcong
