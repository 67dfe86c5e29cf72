#include "qcong/eta_quotient.hpp"

#include <sstream>

#include "qcong/qfactory.hpp"

namespace qcong {

EtaQuotient::EtaQuotient(std::uint64_t level, std::map<std::uint64_t, std::int64_t> exponents)
    : level_(level), exponents_(std::move(exponents)) {
  if (level_ == 0) {
    throw SeriesError("eta quotient level must be positive");
  }
  bool any_nonzero = false;
  for (const auto& [delta, r] : exponents_) {
    if (delta == 0 || level_ % delta != 0) {
      throw SeriesError("eta quotient: " + std::to_string(delta) + " does not divide level " +
                        std::to_string(level_));
    }
    any_nonzero = any_nonzero || r != 0;
  }
  if (!any_nonzero) {
    throw SeriesError("eta quotient needs at least one nonzero exponent");
  }
}

std::int64_t EtaQuotient::exponent(std::uint64_t delta) const {
  const auto it = exponents_.find(delta);
  return it == exponents_.end() ? 0 : it->second;
}

std::string EtaQuotient::to_string() const {
  std::ostringstream out;
  out << "eta(" << level_ << ";";
  const char* sep = " ";
  for (const auto& [delta, r] : exponents_) {
    out << sep << delta << "^" << r;
    sep = ", ";
  }
  out << ")";
  return out.str();
}

EtaExpansion expand_eta_quotient(const EtaQuotient& f, std::size_t trunc, CoeffMode mode) {
  Integer weighted = 0;
  std::vector<PochhammerFactor> factors;
  for (const auto& [delta, r] : f.exponents()) {
    weighted += Integer(static_cast<unsigned long>(delta)) * Integer(static_cast<long>(r));
    if (r != 0) {
      factors.push_back({delta, delta, r, false});
    }
  }
  mpq_class exponent(weighted, 24);
  exponent.canonicalize();
  return {exponent, expand_qproduct(QProduct(std::move(factors)), trunc, mode)};
}

Series eta_quotient_series(const EtaQuotient& f, std::size_t trunc, CoeffMode mode) {
  Integer weighted = 0;
  for (const auto& [delta, r] : f.exponents()) {
    weighted += Integer(static_cast<unsigned long>(delta)) * Integer(static_cast<long>(r));
  }
  if (weighted % 24 != 0) {
    throw SeriesError("eta quotient " + f.to_string() +
                      " has a non-integral prefactor exponent " + weighted.get_str() + "/24");
  }
  if (weighted < 0) {
    throw SeriesError("eta quotient " + f.to_string() + " has a negative prefactor exponent");
  }
  const Integer shift_by = weighted / 24;
  if (shift_by >= trunc) {
    return Series::zero(trunc, mode);
  }
  const std::size_t k = shift_by.get_ui();
  const EtaExpansion e = expand_eta_quotient(f, trunc - k, mode);
  return shift(e.series, k);
}

}  // namespace qcong
