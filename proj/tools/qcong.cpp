// qcong: command-line front end for expanding q-series and checking
// identities and congruences.
//
// Exit status: 0 when every check passed, 1 when some check failed, 2 on a
// usage, parse, or expansion error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcong/config.hpp"
#include "qcong/congruence.hpp"
#include "qcong/eta_quotient.hpp"
#include "qcong/expr.hpp"
#include "qcong/modular.hpp"
#include "qcong/number_theory.hpp"
#include "qcong/oracle.hpp"
#include "qcong/pdissection.hpp"
#include "qcong/registry.hpp"
#include "qcong/report.hpp"

#ifndef QCONG_REGISTRY_PATH
#define QCONG_REGISTRY_PATH "data/registry.json"
#endif

namespace {

using namespace qcong;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  std::size_t trunc = 0;
  std::optional<std::uint64_t> modulus;
  std::size_t bound = 0;
  std::string registry = QCONG_REGISTRY_PATH;
  std::string filter = "*";
  unsigned threads = 0;
  // expand / density
  std::string expression;
  std::uint64_t residue = 0;
  std::vector<std::size_t> checkpoints;
  // congruence
  std::string progression;
  std::uint64_t claimed = 0;
  std::uint64_t ell = 5;
  std::string source = "both";
  std::uint64_t prime = 7;
  unsigned alpha = 1;
  // eta-check
  std::vector<unsigned> ks;
  std::string quotient;
  // pdissect
  std::string target = "f1";
};

void print_report(const VerificationReport& r) {
  std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  order=" << r.order_checked << "  "
            << r.detail;
  if (r.witness) {
    std::cout << "  [witness " << r.witness->index << ": " << r.witness->lhs << " vs "
              << r.witness->rhs << "]";
  }
  std::cout << '\n';
}

void print_density(const DensityReport& d) {
  std::cout << "DENSITY " << d.id << "  r=" << d.residue << " mod " << d.modulus
            << "  (n in [0, X))\n";
  for (const auto& c : d.checkpoints) {
    mpq_class delta(static_cast<unsigned long>(c.count), static_cast<unsigned long>(c.x));
    delta.canonicalize();
    std::cout << "  X=" << c.x << "  count=" << c.count << "  delta=" << delta.get_str() << " ~ "
              << delta.get_d() << '\n';
  }
}

int finish(RunManifest manifest, const Options& opt) {
  manifest.timestamp = current_timestamp();
  manifest.tool_version = kToolVersion;
  if (opt.json) {
    std::cout << nlohmann::json(manifest).dump(2) << '\n';
  } else {
    for (const auto& r : manifest.results) {
      std::visit(
          [](const auto& report) {
            if constexpr (std::is_same_v<std::decay_t<decltype(report)>, VerificationReport>) {
              print_report(report);
            } else {
              print_density(report);
            }
          },
          r);
    }
    std::cout << "overall: " << (manifest.overall_pass() ? "pass" : "fail") << '\n';
  }
  return manifest.overall_pass() ? kExitPass : kExitFail;
}

CoeffMode mode_of(const Options& opt) {
  return opt.modulus ? CoeffMode::modular(*opt.modulus) : CoeffMode::exact();
}

// "20n+7" -> (20, 7)
std::pair<std::uint64_t, std::uint64_t> parse_progression(const std::string& text) {
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  char n = 0;
  char plus = 0;
  std::istringstream in(text);
  if (!(in >> m >> n) || n != 'n') {
    throw CLI::ValidationError("progression", "expected the form MnPLUSR such as 20n+7");
  }
  if (in >> plus) {
    if (plus != '+' || !(in >> r)) {
      throw CLI::ValidationError("progression", "expected the form MnPLUSR such as 20n+7");
    }
  }
  return {m, r};
}

int cmd_expand(const Options& opt) {
  const ExprPtr e = parse_expression(opt.expression);
  const std::size_t trunc = opt.trunc == 0 ? 20 : opt.trunc;
  const Series s = evaluate(*e, trunc, mode_of(opt));
  if (opt.json) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t n = 0; n < s.trunc(); ++n) {
      coeffs.push_back(s.coeff(n).get_str());
    }
    nlohmann::json out = {{"expression", to_string(*e)}, {"trunc", trunc}, {"coefficients", coeffs}};
    if (opt.modulus) {
      out["modulus"] = *opt.modulus;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    for (std::size_t n = 0; n < s.trunc(); ++n) {
      std::cout << n << ' ' << s.coeff(n) << '\n';
    }
  }
  return kExitPass;
}

int cmd_verify(const Options& opt) {
  const Registry registry = Registry::load(opt.registry);
  const std::size_t trunc = opt.trunc == 0 ? kDefaultVerifyOrder : opt.trunc;
  if (registry.ids(opt.filter).empty()) {
    std::cerr << "qcong: no registry entry matches '" << opt.filter << "'\n";
    return kExitUsage;
  }
  RunManifest m;
  m.command = "verify";
  m.parameters = {{"registry", opt.registry}, {"filter", opt.filter}, {"trunc", std::to_string(trunc)}};
  if (opt.modulus) {
    m.parameters["mod"] = std::to_string(*opt.modulus);
  }
  for (auto& r : verify_all(registry, opt.filter, trunc, opt.modulus, opt.threads)) {
    m.results.emplace_back(std::move(r));
  }
  return finish(std::move(m), opt);
}

int cmd_congruence(const Options& opt) {
  const auto [m, r] = parse_progression(opt.progression);
  APAssertion a;
  a.m = m;
  a.r = r;
  a.modulus = opt.modulus.value_or(2);
  a.claimed = opt.claimed;
  a.bound = opt.bound == 0 ? 1000 : opt.bound;
  a.ell = opt.ell;
  a.source = ap_source_from_string(opt.source);
  RunManifest manifest;
  manifest.command = "congruence";
  manifest.parameters = {{"progression", opt.progression}, {"mod", std::to_string(a.modulus)},
                         {"claimed", std::to_string(a.claimed)}, {"bound", std::to_string(a.bound)},
                         {"ell", std::to_string(a.ell)}, {"source", opt.source}};
  manifest.results.emplace_back(verify_ap(a));
  return finish(std::move(manifest), opt);
}

int cmd_families(const Options& opt) {
  RunManifest manifest;
  manifest.command = "families";
  manifest.parameters = {{"p", std::to_string(opt.prime)}, {"alpha", std::to_string(opt.alpha)}};
  if (!eligible_prime(opt.prime)) {
    VerificationReport r;
    r.id = "mod-4 families p=" + std::to_string(opt.prime);
    r.passed = false;
    r.detail = "p is not eligible: (3/p) = " + std::to_string(legendre(3, opt.prime)) +
               " equals (-5/p) = " + std::to_string(legendre(-5, opt.prime));
    manifest.results.emplace_back(std::move(r));
    return finish(std::move(manifest), opt);
  }
  const std::size_t bound = opt.bound == 0 ? config::max_truncation() : opt.bound;
  const std::size_t trunc = opt.trunc == 0 ? config::max_truncation() : opt.trunc;
  manifest.parameters["bound"] = std::to_string(bound);
  manifest.parameters["trunc"] = std::to_string(trunc);
  manifest.results.emplace_back(verify_thm12_families(
      opt.prime, opt.alpha, bound, bprime_series(5, trunc, CoeffMode::modular(4))));
  return finish(std::move(manifest), opt);
}

int cmd_internal(const Options& opt) {
  RunManifest manifest;
  manifest.command = "internal";
  const std::size_t trunc = opt.trunc == 0 ? config::max_truncation() : opt.trunc;
  manifest.parameters = {{"alpha", std::to_string(opt.alpha)}, {"trunc", std::to_string(trunc)}};
  const std::optional<std::size_t> bound =
      opt.bound == 0 ? std::nullopt : std::optional<std::size_t>(opt.bound);
  manifest.results.emplace_back(
      verify_internal_congruence(opt.alpha, bound, bprime_series(5, trunc, CoeffMode::modular(5))));
  return finish(std::move(manifest), opt);
}

int cmd_parity(const Options& opt) {
  const std::size_t bound = opt.bound == 0 ? 100000 : opt.bound;
  RunManifest manifest;
  manifest.command = "parity";
  manifest.parameters = {{"bound", std::to_string(bound)}};
  manifest.results.emplace_back(verify_parity_characterization(bound));
  return finish(std::move(manifest), opt);
}

int cmd_density(const Options& opt) {
  if (!opt.modulus) {
    throw CLI::ValidationError("--mod", "density needs a modulus");
  }
  std::vector<std::size_t> checkpoints = opt.checkpoints;
  if (checkpoints.empty()) {
    checkpoints = {1000, 10000};
  }
  std::size_t top = 0;
  for (auto x : checkpoints) {
    top = std::max(top, x);
  }
  const std::size_t trunc = std::max(opt.trunc, top);
  const ExprPtr e = parse_expression(opt.expression);
  const Series s = evaluate(*e, trunc, CoeffMode::modular(*opt.modulus));
  RunManifest manifest;
  manifest.command = "density";
  manifest.parameters = {{"expression", to_string(*e)}, {"mod", std::to_string(*opt.modulus)},
                         {"residue", std::to_string(opt.residue)}, {"trunc", std::to_string(trunc)}};
  manifest.results.emplace_back(density(s, *opt.modulus, opt.residue, checkpoints, to_string(*e)));
  return finish(std::move(manifest), opt);
}

VerificationReport eta_profile_report(const EtaQuotient& f, std::optional<unsigned> k) {
  Stopwatch clock;
  const ModularFormProfile p = holomorphy_report(f);
  VerificationReport r;
  r.id = k ? "B_" + std::to_string(*k) : f.to_string();
  r.order_checked = p.cusp_orders.size();
  std::ostringstream detail;
  detail << "weight=" << p.weight.get_str() << " sum1=" << p.admissibility.sum1
         << " sum2=" << p.admissibility.sum2
         << " admissible=" << (p.admissibility.admissible ? "yes" : "no")
         << " holomorphic=" << (p.holomorphic ? "yes" : "no");
  if (p.character) {
    detail << " character=(" << p.character->to_string() << " / .) ~ (" << p.character->square_class()
           << " / .)";
  }
  r.passed = p.admissibility.admissible && p.holomorphic;
  if (k) {
    for (const auto& row : bk_divisor_table(*k)) {
      detail << "\n    d in {";
      for (std::size_t i = 0; i < row.divisors.size(); ++i) {
        detail << (i ? "," : "") << row.divisors[i];
      }
      detail << "}: L = " << row.formula << " = " << row.closed_form.get_str()
             << (row.matches ? "  (all divisors agree)" : "  MISMATCH");
      r.passed = r.passed && row.matches && row.closed_form >= 0;
    }
  } else {
    for (const auto& [d, order] : p.cusp_orders) {
      detail << "\n    order at 1/" << d << " = " << order.get_str();
    }
  }
  r.detail = detail.str();
  r.elapsed = clock.elapsed();
  return r;
}

int cmd_eta_check(const Options& opt) {
  RunManifest manifest;
  manifest.command = "eta-check";
  if (!opt.quotient.empty()) {
    const ExprPtr e = parse_expression(opt.quotient);
    if (e->kind != ExprKind::eta) {
      throw CLI::ValidationError("--quotient", "expected eta(N; d^r, ...)");
    }
    manifest.parameters["quotient"] = e->quotient->to_string();
    manifest.results.emplace_back(eta_profile_report(*e->quotient, std::nullopt));
  }
  std::vector<unsigned> ks = opt.ks;
  if (ks.empty() && opt.quotient.empty()) {
    ks = {1, 2, 3, 4, 5, 6};
  }
  std::string klist;
  for (unsigned k : ks) {
    klist += (klist.empty() ? "" : ",") + std::to_string(k);
    manifest.results.emplace_back(eta_profile_report(construct_Bk(k), k));
  }
  if (!klist.empty()) {
    manifest.parameters["k"] = klist;
  }
  return finish(std::move(manifest), opt);
}

int cmd_oracle_compare(const Options& opt) {
  const std::size_t bound = opt.bound == 0 ? 1000 : opt.bound;
  Stopwatch clock;
  const Series s = bprime_series(opt.ell, bound);
  const auto counts = partition_count_table(opt.ell, bound - 1, PartitionVariant::distinct_parts);
  VerificationReport r;
  r.id = "b'_" + std::to_string(opt.ell) + " series vs DP";
  r.order_checked = bound;
  for (std::size_t n = 0; n < bound; ++n) {
    if (s.coeff(n) != counts[n]) {
      r.passed = false;
      r.witness = Witness{n, s.coeff(n).get_str(), counts[n].get_str()};
      r.detail = "generating function and count disagree at n = " + std::to_string(n);
      break;
    }
  }
  if (r.passed) {
    r.detail = "exact agreement for 0 <= n < " + std::to_string(bound);
  }
  r.elapsed = clock.elapsed();
  RunManifest manifest;
  manifest.command = "oracle-compare";
  manifest.parameters = {{"ell", std::to_string(opt.ell)}, {"bound", std::to_string(bound)}};
  manifest.results.emplace_back(std::move(r));
  if (opt.ell >= 5 && is_prime(opt.ell)) {
    manifest.results.emplace_back(verify_cuigu(opt.ell, std::min<std::size_t>(bound, 2000)));
  }
  return finish(std::move(manifest), opt);
}

int cmd_pdissect(const Options& opt) {
  const std::size_t trunc = opt.trunc == 0 ? 600 : opt.trunc;
  DissectionTarget target = DissectionTarget::f1;
  if (opt.target == "f1cubed") {
    target = DissectionTarget::f1cubed;
  } else if (opt.target != "f1") {
    throw CLI::ValidationError("--target", "expected f1 or f1cubed");
  }
  RunManifest manifest;
  manifest.command = "pdissect";
  manifest.parameters = {{"p", std::to_string(opt.prime)}, {"target", opt.target},
                         {"trunc", std::to_string(trunc)}};
  manifest.results.emplace_back(verify_p_dissection(opt.prime, target, trunc));
  return finish(std::move(manifest), opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated q-series, partition congruences and eta quotients"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit a JSON run manifest");
  app.add_option("--registry", opt.registry, "Registry file")->capture_default_str();
  app.add_option("--threads", opt.threads, "Worker threads for verify (0 = all cores)");

  auto add_trunc = [&](CLI::App* c) { c->add_option("--trunc", opt.trunc, "Truncation order"); };
  auto add_mod = [&](CLI::App* c) { c->add_option("--mod", opt.modulus, "Reduce modulo M")->check(CLI::Range(2ULL, 1ULL << 31)); };
  auto add_bound = [&](CLI::App* c) { c->add_option("--bound", opt.bound, "Check 0 <= n < bound"); };

  auto* expand = app.add_subcommand("expand", "Print coefficients of an expression");
  expand->add_option("expression", opt.expression, "Expression, see docs/grammar.md")->required();
  add_trunc(expand);
  add_mod(expand);

  auto* verify = app.add_subcommand("verify", "Verify registry entries");
  verify->add_option("--filter", opt.filter, "Glob over entry ids")->capture_default_str();
  add_trunc(verify);
  add_mod(verify);

  auto* congruence = app.add_subcommand("congruence", "Check b'_ell(mn+r) = c mod M");
  congruence->add_option("progression", opt.progression, "Progression such as 20n+7")->required();
  add_mod(congruence);
  add_bound(congruence);
  congruence->add_option("--claimed", opt.claimed, "Claimed residue (default 0)");
  congruence->add_option("--ell", opt.ell, "ell (default 5)")->check(CLI::Range(2ULL, 1000ULL));
  congruence->add_option("--source", opt.source, "series, oracle or both")->capture_default_str();

  auto* families = app.add_subcommand("families", "Mod-4 families for an eligible prime p");
  families->add_option("--p", opt.prime, "Prime p >= 5")->required();
  families->add_option("--alpha", opt.alpha, "Largest alpha")->capture_default_str();
  add_bound(families);
  add_trunc(families);

  auto* internal = app.add_subcommand("internal", "b'_5(5n+1) = b'_5(5^(2a+1) n + (5^(2a+1)+1)/6) mod 5");
  internal->add_option("--alpha", opt.alpha, "Largest alpha")->capture_default_str();
  add_bound(internal);
  add_trunc(internal);

  auto* parity = app.add_subcommand("parity", "Parity of b'_5(2n+1)");
  add_bound(parity);

  auto* dens = app.add_subcommand("density", "Proportion of coefficients congruent to r mod M");
  dens->add_option("expression", opt.expression, "Expression")->required();
  add_mod(dens);
  dens->add_option("--residue", opt.residue, "Residue r (default 0)");
  dens->add_option("--checkpoints", opt.checkpoints, "Values of X")->delimiter(',');
  add_trunc(dens);

  auto* eta = app.add_subcommand("eta-check", "Admissibility, character and cusp orders");
  eta->add_option("--k", opt.ks, "B_k indices (default 1..6)")->delimiter(',');
  eta->add_option("--quotient", opt.quotient, "Explicit quotient eta(N; d^r, ...)");

  auto* oracle = app.add_subcommand("oracle-compare", "Generating function against DP counts");
  oracle->add_option("--ell", opt.ell, "ell (default 5)")->check(CLI::Range(2ULL, 1000ULL));
  add_bound(oracle);

  auto* pdis = app.add_subcommand("pdissect", "p-dissection of (q;q) or (q;q)^3");
  pdis->add_option("--p", opt.prime, "Prime p")->required();
  pdis->add_option("--target", opt.target, "f1 or f1cubed")->capture_default_str();
  add_trunc(pdis);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(opt);
    if (*verify) return cmd_verify(opt);
    if (*congruence) return cmd_congruence(opt);
    if (*families) return cmd_families(opt);
    if (*internal) return cmd_internal(opt);
    if (*parity) return cmd_parity(opt);
    if (*dens) return cmd_density(opt);
    if (*eta) return cmd_eta_check(opt);
    if (*oracle) return cmd_oracle_compare(opt);
    if (*pdis) return cmd_pdissect(opt);
  } catch (const ParseError& e) {
    std::cerr << "qcong: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "qcong: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qcong: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
