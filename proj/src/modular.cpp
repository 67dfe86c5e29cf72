#include "qcong/modular.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qcong/number_theory.hpp"

namespace qcong {
namespace {

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }
Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

mpq_class ratio(const Integer& num, const Integer& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::int64_t checked_pow5(unsigned e) {
  std::int64_t v = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (v > std::numeric_limits<std::int64_t>::max() / 5) {
      throw std::invalid_argument("5^" + std::to_string(e) + " does not fit in 64 bits");
    }
    v *= 5;
  }
  return v;
}

constexpr std::uint64_t kBkLevel = 360;

}  // namespace

mpq_class weight(const EtaQuotient& f) {
  Integer total = 0;
  for (const auto& [delta, r] : f.exponents()) {
    total += big(r);
  }
  return ratio(total, 2);
}

Admissibility check_admissibility(const EtaQuotient& f) {
  Admissibility out;
  for (const auto& [delta, r] : f.exponents()) {
    out.sum1 += big(delta) * big(r);
    out.sum2 += big(f.level() / delta) * big(r);
  }
  out.integral_weight = weight(f).get_den() == 1;
  out.admissible = out.integral_weight && out.sum1 % 24 == 0 && out.sum2 % 24 == 0;
  return out;
}

mpq_class cusp_order(const EtaQuotient& f, const CuspClass& cusp) {
  const std::uint64_t n = f.level();
  if (cusp.d == 0 || n % cusp.d != 0) {
    throw std::invalid_argument("cusp denominator " + std::to_string(cusp.d) +
                                " does not divide the level " + std::to_string(n));
  }
  if (std::gcd(static_cast<std::uint64_t>(cusp.c < 0 ? -cusp.c : cusp.c), cusp.d) != 1) {
    throw std::invalid_argument("cusp numerator must be coprime to " + std::to_string(cusp.d));
  }
  const std::uint64_t d = cusp.d;
  mpq_class sum = 0;
  for (const auto& [delta, r] : f.exponents()) {
    const std::uint64_t g = std::gcd(d, delta);
    sum += ratio(big(g) * big(g) * big(r), big(delta));
  }
  return sum * ratio(big(n), Integer(24) * big(std::gcd(d, n / d)) * big(d));
}

std::int64_t CharacterDiscriminant::square_class() const {
  std::int64_t v = sign;
  for (const auto& [p, e] : prime_exponents) {
    if (mpz_odd_p(e.get_mpz_t())) {
      v *= static_cast<std::int64_t>(p);
    }
  }
  return v;
}

int CharacterDiscriminant::evaluate(std::int64_t d) const { return kronecker(square_class(), d); }

std::string CharacterDiscriminant::to_string() const {
  std::ostringstream out;
  out << (sign < 0 ? "-" : "+");
  for (const auto& [p, e] : prime_exponents) {
    out << ' ' << p << '^' << e;
  }
  return out.str();
}

CharacterDiscriminant character_discriminant(const EtaQuotient& f) {
  const mpq_class l = weight(f);
  if (l.get_den() != 1) {
    throw std::invalid_argument("character needs an integral weight, got " + l.get_str());
  }
  CharacterDiscriminant out;
  out.sign = mpz_odd_p(l.get_num_mpz_t()) ? -1 : 1;
  for (const auto& [delta, r] : f.exponents()) {
    for (const auto& [p, k] : factorize(delta)) {
      out.prime_exponents[p] += big(r) * k;
    }
  }
  for (auto it = out.prime_exponents.begin(); it != out.prime_exponents.end();) {
    it = it->second == 0 ? out.prime_exponents.erase(it) : std::next(it);
  }
  return out;
}

ModularFormProfile holomorphy_report(const EtaQuotient& f) {
  ModularFormProfile profile{f, weight(f), check_admissibility(f), std::nullopt, {}, true};
  if (profile.admissibility.integral_weight) {
    profile.character = character_discriminant(f);
  }
  for (std::uint64_t d : divisors(f.level())) {
    const mpq_class order = cusp_order(f, {d, 1});
    profile.cusp_orders.emplace(d, order);
    profile.holomorphic = profile.holomorphic && order >= 0;
  }
  return profile;
}

EtaQuotient construct_A() { return EtaQuotient(60, {{12, 5}, {60, -1}}); }

EtaQuotient construct_Bk(unsigned k) {
  if (k == 0) {
    throw std::invalid_argument("B_k is only constructed for k >= 1");
  }
  const std::int64_t p = checked_pow5(k);
  const std::int64_t p1 = checked_pow5(k + 1);
  if (p1 == std::numeric_limits<std::int64_t>::max()) {
    throw std::invalid_argument("exponent overflow in B_k");
  }
  return EtaQuotient(kBkLevel, {{6, -3}, {12, p1 + 1}, {30, 3}, {60, -(p + 1)}});
}

mpq_class bk_table_value(unsigned k, std::uint64_t d) {
  if (d == 0 || kBkLevel % d != 0) {
    throw std::invalid_argument(std::to_string(d) + " does not divide 360");
  }
  const Integer pk = big(checked_pow5(k));
  const Integer g6 = big(std::gcd(d, std::uint64_t{6}));
  const Integer g12 = big(std::gcd(d, std::uint64_t{12}));
  const Integer g30 = big(std::gcd(d, std::uint64_t{30}));
  const Integer g60sq = big(std::gcd(d, std::uint64_t{60})) * big(std::gcd(d, std::uint64_t{60}));
  return ratio((25 * pk + 5) * g12 * g12, g60sq) + ratio(6 * g30 * g30, g60sq) -
         ratio(30 * g6 * g6, g60sq) - mpq_class(pk) - 1;
}

mpq_class bk_table_value_from_cusp_order(unsigned k, std::uint64_t d) {
  const mpq_class order = cusp_order(construct_Bk(k), {d, 1});
  const std::uint64_t g60 = std::gcd(d, std::uint64_t{60});
  // order = N g60^2 / (24 * 60 * gcd(d, N/d) * d) * L
  const mpq_class factor =
      ratio(big(kBkLevel) * big(g60) * big(g60),
            Integer(24 * 60) * big(std::gcd(d, kBkLevel / d)) * big(d));
  return order / factor;
}

std::vector<BkRow> bk_divisor_table(unsigned k) {
  const mpq_class pk(big(checked_pow5(k)));
  const mpq_class tail = (25 * pk + 5) / mpq_class(25) - pk;
  std::vector<BkRow> rows = {
      {{1, 2, 3, 6, 9, 18}, "24*5^k - 20", 24 * pk - 20, {}, false},
      {{4, 8, 12, 24, 36, 72}, "24*5^k - 2", 24 * pk - 2, {}, false},
      {{5, 10, 15, 30, 45, 90}, "(5^(k+2)+5)/25 - 5^k + 19/5", tail + mpq_class(19, 5), {}, false},
      {{20, 40, 60, 120, 180, 360}, "(5^(k+2)+5)/25 - 5^k + 1/5", tail + mpq_class(1, 5), {},
       false},
  };
  for (auto& row : rows) {
    row.closed_form.canonicalize();
    row.matches = true;
    for (std::uint64_t d : row.divisors) {
      const mpq_class l = bk_table_value(k, d);
      const mpq_class order = cusp_order(construct_Bk(k), {d, 1});
      row.values.emplace(d, l);
      row.matches = row.matches && l == row.closed_form && sgn(l) == sgn(order) &&
                    bk_table_value_from_cusp_order(k, d) == l;
    }
  }
  return rows;
}

DensityReport density(const Series& a, std::uint64_t modulus, std::uint64_t residue,
                      const std::vector<std::size_t>& checkpoints, std::string id) {
  if (modulus < 1 || residue >= modulus) {
    throw std::invalid_argument("density needs 0 <= r < M");
  }
  if (!a.is_exact() && a.mode().modulus() % modulus != 0) {
    throw std::invalid_argument("series modulus " + std::to_string(a.mode().modulus()) +
                                " is not a multiple of " + std::to_string(modulus));
  }
  std::size_t top = 0;
  for (std::size_t x : checkpoints) {
    if (x == 0) {
      throw std::invalid_argument("density checkpoints must be positive");
    }
    if (x > a.trunc()) {
      throw SeriesError("density checkpoint " + std::to_string(x) + " exceeds the truncation " +
                        std::to_string(a.trunc()));
    }
    top = std::max(top, x);
  }
  std::vector<std::size_t> prefix(top + 1, 0);
  const Integer big_m = big(modulus);
  for (std::size_t n = 0; n < top; ++n) {
    bool hit = false;
    if (a.is_exact()) {
      Integer v = a.exact_coeffs()[n] % big_m;
      if (v < 0) {
        v += big_m;
      }
      hit = v == residue;
    } else {
      hit = a.residues()[n] % modulus == residue;
    }
    prefix[n + 1] = prefix[n] + (hit ? 1 : 0);
  }
  DensityReport report{std::move(id), modulus, residue, {}};
  for (std::size_t x : checkpoints) {
    report.checkpoints.push_back({x, prefix[x]});
  }
  return report;
}

}  // namespace qcong
