#pragma once

// Catalogue of q-series identities and progression congruences, loaded from
// a JSON file and verified coefficient-wise.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcong/congruence.hpp"
#include "qcong/expr.hpp"
#include "qcong/report.hpp"

namespace qcong {

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// lhs = rhs, exactly or modulo `modulus`.
struct IdentityEntry {
  std::string id;
  ExprPtr lhs;
  ExprPtr rhs;
  std::optional<std::uint64_t> modulus;
  std::string anchor;
};

/// b'_ell(m n + r) = claimed mod modulus; `bound` is filled in at verification time.
struct APEntry {
  std::string id;
  APAssertion assertion;
  std::string anchor;
};

class Registry {
 public:
  static Registry load(const std::filesystem::path& path);
  static Registry from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  void save(const std::filesystem::path& path) const;

  /// Throws RegistryError if the id is already taken.
  void add(IdentityEntry entry);
  void add(APEntry entry);

  bool contains(const std::string& id) const;
  const IdentityEntry* find_identity(const std::string& id) const;
  const APEntry* find_ap(const std::string& id) const;
  /// Sorted ids matching a shell-style glob.
  std::vector<std::string> ids(std::string_view glob = "*") const;
  std::size_t size() const { return identities_.size() + aps_.size(); }

 private:
  std::map<std::string, IdentityEntry> identities_;
  std::map<std::string, APEntry> aps_;
};

inline constexpr std::size_t kDefaultVerifyOrder = 500;

/// Expands both sides to `trunc` terms (mod the entry's modulus, or the
/// override if given) and compares.  A failure carries the smallest
/// disagreeing exponent.
VerificationReport verify_identity(const IdentityEntry& entry,
                                   std::size_t trunc = kDefaultVerifyOrder,
                                   std::optional<std::uint64_t> modulus_override = std::nullopt);

/// Dispatches on the entry kind; progression entries are checked for
/// 0 <= n < trunc.  Throws RegistryError for an unknown id.
VerificationReport verify_identity(const Registry& registry, const std::string& id,
                                   std::size_t trunc = kDefaultVerifyOrder,
                                   std::optional<std::uint64_t> modulus_override = std::nullopt);

/// Verifies every entry matching `glob`, using up to `threads` workers
/// (0 = hardware concurrency).  Results are sorted by id.
std::vector<VerificationReport> verify_all(const Registry& registry, std::string_view glob = "*",
                                           std::size_t trunc = kDefaultVerifyOrder,
                                           std::optional<std::uint64_t> modulus_override = std::nullopt,
                                           unsigned threads = 0);

}  // namespace qcong
