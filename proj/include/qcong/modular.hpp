#pragma once

// Modularity criteria for eta quotients on Gamma_0(N): admissibility,
// nebentypus character, cusp orders, and the B_k family built from
// A(z) = eta^5(12z)/eta(60z).  Also the coefficient density estimator.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qcong/eta_quotient.hpp"
#include "qcong/report.hpp"
#include "qcong/series.hpp"

namespace qcong {

/// (1/2) sum r_delta.
mpq_class weight(const EtaQuotient& f);

struct Admissibility {
  Integer sum1;  // sum delta r_delta
  Integer sum2;  // sum (N/delta) r_delta
  bool integral_weight = false;
  bool admissible = false;
};

Admissibility check_admissibility(const EtaQuotient& f);

/// The cusp c/d of Gamma_0(N).
struct CuspClass {
  std::uint64_t d = 1;
  std::int64_t c = 1;
};

/// N/24 * sum gcd(d,delta)^2 r_delta / (gcd(d,N/d) d delta).  Depends on d
/// only.  Throws std::invalid_argument if d does not divide N or gcd(c,d) != 1.
mpq_class cusp_order(const EtaQuotient& f, const CuspClass& cusp);

/// Upper argument s = (-1)^l prod delta^{r_delta} of the character, kept factored.
struct CharacterDiscriminant {
  int sign = 1;
  std::map<std::uint64_t, Integer> prime_exponents;  // may be negative

  /// Squarefree representative of the square class of s (sign included).
  std::int64_t square_class() const;
  /// chi(d) as the Kronecker symbol (square_class / d).
  int evaluate(std::int64_t d) const;
  /// e.g. "+ 2^8 3^4 5^-3"
  std::string to_string() const;
};

/// Throws std::invalid_argument when the weight is not an integer.
CharacterDiscriminant character_discriminant(const EtaQuotient& f);

struct ModularFormProfile {
  EtaQuotient quotient;
  mpq_class weight;
  Admissibility admissibility;
  std::optional<CharacterDiscriminant> character;  // absent for non-integral weight
  std::map<std::uint64_t, mpq_class> cusp_orders;  // one per divisor d of N
  bool holomorphic = false;
};

ModularFormProfile holomorphy_report(const EtaQuotient& f);

/// A(z) = eta^5(12z) / eta(60z) at level 60.
EtaQuotient construct_A();

/// eta^{5^{k+1}+1}(12z) eta^3(30z) / (eta^3(6z) eta^{5^k+1}(60z)) at level 360.
/// Throws std::invalid_argument for k = 0 or exponents beyond 64 bits.
EtaQuotient construct_Bk(unsigned k);

/// The table quantity L for B_k at d, evaluated from its gcd expression.
mpq_class bk_table_value(unsigned k, std::uint64_t d);
/// L recovered from cusp_order(B_k, d) by the positive factor relating the two.
mpq_class bk_table_value_from_cusp_order(unsigned k, std::uint64_t d);

struct BkRow {
  std::vector<std::uint64_t> divisors;
  std::string formula;  // closed form in k
  mpq_class closed_form;
  std::map<std::uint64_t, mpq_class> values;  // bk_table_value per divisor
  bool matches = false;  // every value equals closed_form and agrees in sign with the cusp order
};

/// The four divisor classes of 360 with their closed forms.
std::vector<BkRow> bk_divisor_table(unsigned k);

/// Counts n in [0, X) with a(n) = r mod M at each checkpoint X.  Throws
/// SeriesError if some X exceeds the truncation, std::invalid_argument for
/// r >= M or a modular series whose modulus is not a multiple of M.
DensityReport density(const Series& a, std::uint64_t modulus, std::uint64_t residue,
                      const std::vector<std::size_t>& checkpoints, std::string id = "density");

}  // namespace qcong
