#include "qcong/registry.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

namespace qcong {
namespace {

constexpr const char* kIdentityKind = "identity";
constexpr const char* kApKind = "ap-congruence";

ExprPtr parse_side(const nlohmann::json& j, const char* field, const std::string& id) {
  const auto text = j.at(field).get<std::string>();
  try {
    return parse_expression(text);
  } catch (const ParseError& e) {
    throw RegistryError("entry '" + id + "', " + field + ": " + e.what());
  }
}

std::string coefficient_text(const Series& s, std::size_t n) { return s.coeff(n).get_str(); }

}  // namespace

Registry Registry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw RegistryError("cannot open registry " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw RegistryError("malformed registry " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

Registry Registry::from_json(const nlohmann::json& j) {
  Registry registry;
  try {
    for (const auto& item : j.at("entries")) {
      const auto id = item.at("id").get<std::string>();
      const auto kind = item.value("kind", std::string(kIdentityKind));
      const auto anchor = item.value("anchor", std::string{});
      if (kind == kIdentityKind) {
        IdentityEntry entry{id, parse_side(item, "lhs", id), parse_side(item, "rhs", id),
                            std::nullopt, anchor};
        if (item.contains("modulus")) {
          entry.modulus = item.at("modulus").get<std::uint64_t>();
          if (*entry.modulus < 2) {
            throw RegistryError("entry '" + id + "': modulus must be at least 2");
          }
        }
        registry.add(std::move(entry));
      } else if (kind == kApKind) {
        APAssertion a;
        a.m = item.at("m").get<std::uint64_t>();
        a.r = item.at("r").get<std::uint64_t>();
        a.modulus = item.at("modulus").get<std::uint64_t>();
        a.claimed = item.value("claimed", std::uint64_t{0});
        a.ell = item.value("ell", std::uint64_t{5});
        a.source = ap_source_from_string(item.value("source", std::string("series")));
        a.bound = 1;
        try {
          a.validate();
        } catch (const std::invalid_argument& e) {
          throw RegistryError("entry '" + id + "': " + e.what());
        }
        registry.add(APEntry{id, a, anchor});
      } else {
        throw RegistryError("entry '" + id + "': unknown kind '" + kind + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw RegistryError(std::string("malformed registry: ") + e.what());
  }
  return registry;
}

nlohmann::json Registry::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& id : ids()) {
    if (const auto* e = find_identity(id)) {
      nlohmann::json item = {{"id", e->id},
                             {"lhs", to_string(*e->lhs)},
                             {"rhs", to_string(*e->rhs)},
                             {"anchor", e->anchor}};
      if (e->modulus) {
        item["modulus"] = *e->modulus;
      }
      entries.push_back(std::move(item));
    } else {
      const auto* ap = find_ap(id);
      const auto& a = ap->assertion;
      entries.push_back({{"id", ap->id},
                         {"kind", kApKind},
                         {"ell", a.ell},
                         {"m", a.m},
                         {"r", a.r},
                         {"modulus", a.modulus},
                         {"claimed", a.claimed},
                         {"source", to_string(a.source)},
                         {"anchor", ap->anchor}});
    }
  }
  return {{"entries", entries}};
}

void Registry::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) {
    throw RegistryError("cannot write registry " + path.string());
  }
  out << to_json().dump(2) << '\n';
}

void Registry::add(IdentityEntry entry) {
  if (contains(entry.id)) {
    throw RegistryError("duplicate registry id '" + entry.id + "'");
  }
  if (!entry.lhs || !entry.rhs) {
    throw RegistryError("entry '" + entry.id + "' is missing a side");
  }
  const std::string id = entry.id;
  identities_.emplace(id, std::move(entry));
}

void Registry::add(APEntry entry) {
  if (contains(entry.id)) {
    throw RegistryError("duplicate registry id '" + entry.id + "'");
  }
  const std::string id = entry.id;
  aps_.emplace(id, std::move(entry));
}

bool Registry::contains(const std::string& id) const {
  return identities_.count(id) != 0 || aps_.count(id) != 0;
}

const IdentityEntry* Registry::find_identity(const std::string& id) const {
  const auto it = identities_.find(id);
  return it == identities_.end() ? nullptr : &it->second;
}

const APEntry* Registry::find_ap(const std::string& id) const {
  const auto it = aps_.find(id);
  return it == aps_.end() ? nullptr : &it->second;
}

std::vector<std::string> Registry::ids(std::string_view glob) const {
  const std::string pattern(glob);
  std::vector<std::string> out;
  auto collect = [&](const std::string& id) {
    if (fnmatch(pattern.c_str(), id.c_str(), 0) == 0) {
      out.push_back(id);
    }
  };
  for (const auto& [id, e] : identities_) {
    collect(id);
  }
  for (const auto& [id, e] : aps_) {
    collect(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport verify_identity(const IdentityEntry& entry, std::size_t trunc,
                                   std::optional<std::uint64_t> modulus_override) {
  Stopwatch clock;
  const auto modulus = modulus_override ? modulus_override : entry.modulus;
  const CoeffMode mode = modulus ? CoeffMode::modular(*modulus) : CoeffMode::exact();
  const Series lhs = evaluate(*entry.lhs, trunc, mode);
  const Series rhs = evaluate(*entry.rhs, trunc, mode);
  const Agreement agreement = compare(lhs, rhs);

  VerificationReport report;
  report.id = entry.id;
  report.order_checked = agreement.compared;
  report.passed = agreement.equal();
  if (agreement.first_mismatch) {
    const std::size_t n = *agreement.first_mismatch;
    report.witness = Witness{n, coefficient_text(lhs, n), coefficient_text(rhs, n)};
    report.detail = "coefficient of q^" + std::to_string(n) + " differs";
  } else {
    report.detail = "agree to order " + std::to_string(agreement.compared);
  }
  report.detail += modulus ? " mod " + std::to_string(*modulus) : " exactly";
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_identity(const Registry& registry, const std::string& id,
                                   std::size_t trunc,
                                   std::optional<std::uint64_t> modulus_override) {
  if (const auto* e = registry.find_identity(id)) {
    return verify_identity(*e, trunc, modulus_override);
  }
  if (const auto* ap = registry.find_ap(id)) {
    APAssertion a = ap->assertion;
    a.bound = trunc;
    if (modulus_override) {
      a.modulus = *modulus_override;
      a.claimed %= a.modulus;
    }
    VerificationReport report = verify_ap(a);
    report.id = id;
    return report;
  }
  throw RegistryError("unknown registry id '" + id + "'");
}

std::vector<VerificationReport> verify_all(const Registry& registry, std::string_view glob,
                                           std::size_t trunc,
                                           std::optional<std::uint64_t> modulus_override,
                                           unsigned threads) {
  const auto selected = registry.ids(glob);
  std::vector<VerificationReport> reports(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        reports[i] = verify_identity(registry, selected[i], trunc, modulus_override);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, selected.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return reports;
}

}  // namespace qcong
