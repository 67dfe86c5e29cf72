#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qcong {

/// First disagreement found by a check.  `index` is the exponent (or the
/// progression index n for arithmetic-progression checks) and is always
/// below the order that was checked.
struct Witness {
  std::size_t index = 0;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string id;
  std::size_t order_checked = 0;
  bool passed = true;
  std::optional<Witness> witness;
  std::string detail;
  std::chrono::nanoseconds elapsed{0};

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct DensityCheckpoint {
  std::size_t x = 0;
  std::size_t count = 0;  // #{0 <= n < x : a(n) = r mod M}

  friend bool operator==(const DensityCheckpoint&, const DensityCheckpoint&) = default;
};

/// delta_r(F, M; X) = count / X with n ranging over [0, X).
struct DensityReport {
  std::string id;
  std::uint64_t modulus = 0;
  std::uint64_t residue = 0;
  std::vector<DensityCheckpoint> checkpoints;

  friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

using Report = std::variant<VerificationReport, DensityReport>;

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Report> results;
  std::string timestamp;
  std::string tool_version;

  /// True iff every verification report passed; density reports never fail a run.
  bool overall_pass() const;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

/// Elapsed-time helper for filling VerificationReport::elapsed.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                                start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string current_timestamp();
inline constexpr const char* kToolVersion = "0.3.0";

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);
void to_json(nlohmann::json& j, const DensityReport& r);
void from_json(const nlohmann::json& j, DensityReport& r);
void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

}  // namespace qcong
