#include "qcong/report.hpp"

#include <ctime>
#include <stdexcept>

#include <gmpxx.h>

namespace qcong {

bool RunManifest::overall_pass() const {
  for (const auto& r : results) {
    if (const auto* v = std::get_if<VerificationReport>(&r); v != nullptr && !v->passed) {
      return false;
    }
  }
  return true;
}

std::string current_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

void to_json(nlohmann::json& j, const Witness& w) {
  j = {{"index", w.index}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

void from_json(const nlohmann::json& j, Witness& w) {
  j.at("index").get_to(w.index);
  j.at("lhs").get_to(w.lhs);
  j.at("rhs").get_to(w.rhs);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"kind", "verification"},
       {"id", r.id},
       {"order_checked", r.order_checked},
       {"status", r.passed ? "pass" : "fail"},
       {"detail", r.detail},
       {"elapsed_ns", r.elapsed.count()}};
  if (r.witness) {
    j["witness"] = *r.witness;
  }
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("id").get_to(r.id);
  j.at("order_checked").get_to(r.order_checked);
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") {
    throw std::invalid_argument("unknown report status '" + status + "'");
  }
  r.passed = status == "pass";
  r.detail = j.value("detail", std::string{});
  r.elapsed = std::chrono::nanoseconds(j.value("elapsed_ns", std::int64_t{0}));
  if (j.contains("witness")) {
    r.witness = j.at("witness").get<Witness>();
  } else {
    r.witness.reset();
  }
}

void to_json(nlohmann::json& j, const DensityReport& r) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& c : r.checkpoints) {
    mpq_class delta(static_cast<unsigned long>(c.count), static_cast<unsigned long>(c.x));
    delta.canonicalize();
    points.push_back({{"X", c.x}, {"count", c.count}, {"delta", delta.get_str()}});
  }
  j = {{"kind", "density"},
       {"id", r.id},
       {"modulus", r.modulus},
       {"residue", r.residue},
       {"checkpoints", points},
       {"range", "0 <= n < X"}};
}

void from_json(const nlohmann::json& j, DensityReport& r) {
  j.at("id").get_to(r.id);
  j.at("modulus").get_to(r.modulus);
  j.at("residue").get_to(r.residue);
  r.checkpoints.clear();
  for (const auto& p : j.at("checkpoints")) {
    r.checkpoints.push_back({p.at("X").get<std::size_t>(), p.at("count").get<std::size_t>()});
  }
}

void to_json(nlohmann::json& j, const RunManifest& m) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : m.results) {
    std::visit([&](const auto& report) { results.push_back(report); }, r);
  }
  j = {{"command", m.command},
       {"parameters", m.parameters},
       {"results", results},
       {"overall", m.overall_pass() ? "pass" : "fail"},
       {"timestamp", m.timestamp},
       {"tool_version", m.tool_version}};
}

void from_json(const nlohmann::json& j, RunManifest& m) {
  j.at("command").get_to(m.command);
  j.at("parameters").get_to(m.parameters);
  j.at("timestamp").get_to(m.timestamp);
  j.at("tool_version").get_to(m.tool_version);
  m.results.clear();
  for (const auto& r : j.at("results")) {
    const auto kind = r.at("kind").get<std::string>();
    if (kind == "verification") {
      m.results.emplace_back(r.get<VerificationReport>());
    } else if (kind == "density") {
      m.results.emplace_back(r.get<DensityReport>());
    } else {
      throw std::invalid_argument("unknown report kind '" + kind + "'");
    }
  }
}

}  // namespace qcong
