#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include "qcong/series.hpp"

namespace qcong {

/// prod over delta | N of eta(delta z)^{r_delta}.
class EtaQuotient {
 public:
  /// Throws SeriesError if a key does not divide `level` or every exponent is zero.
  EtaQuotient(std::uint64_t level, std::map<std::uint64_t, std::int64_t> exponents);

  std::uint64_t level() const { return level_; }
  const std::map<std::uint64_t, std::int64_t>& exponents() const { return exponents_; }
  std::int64_t exponent(std::uint64_t delta) const;

  /// Text form accepted by the expression parser, e.g. "eta(360; 6^-3, 12^26)".
  std::string to_string() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  std::uint64_t level_;
  std::map<std::uint64_t, std::int64_t> exponents_;
};

/// f = q^E * S(q), E = sum(delta r_delta) / 24.
struct EtaExpansion {
  mpq_class prefactor_exponent;
  Series series;
};

EtaExpansion expand_eta_quotient(const EtaQuotient& f, std::size_t trunc,
                                 CoeffMode mode = CoeffMode::exact());

/// q^E * S(q) as one integral series.  Throws SeriesError unless E is a
/// nonnegative integer.
Series eta_quotient_series(const EtaQuotient& f, std::size_t trunc,
                           CoeffMode mode = CoeffMode::exact());

}  // namespace qcong
