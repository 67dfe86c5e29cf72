#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QCONG_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
    r.out += buf.data();
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("expand") {
  const Run r = run("expand 'bprime(5)' --trunc 10");
  CHECK(r.code == 0);
  CHECK(r.out.find("8 4\n9 6\n") != std::string::npos);
  CHECK(run("expand '(q;q' --trunc 5").code == 2);
}

TEST_CASE("verify") {
  const Run r = run("verify --filter 'exact*' --trunc 200");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS exact1") != std::string::npos);
  const Run j = run("--json verify --filter nm --trunc 100");
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("overall") == "pass");
  CHECK(doc.at("results").size() == 1);
  CHECK(run("verify --filter 'binom-mod2' --mod 4").code == 1);
}

TEST_CASE("congruence") {
  CHECK(run("congruence 20n+7 --mod 4 --bound 100").code == 0);
  const Run bad = run("congruence 20n+7 --mod 8 --bound 100");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(run("congruence 20m+7 --mod 4").code == 2);
}

TEST_CASE("families and eligibility") {
  CHECK(run("families --p 7 --alpha 0 --bound 200 --trunc 100000").code == 0);
  CHECK(run("families --p 17 --alpha 0 --bound 10 --trunc 1000").code == 1);
}

TEST_CASE("other subcommands") {
  CHECK(run("parity --bound 2000").code == 0);
  CHECK(run("internal --alpha 1 --trunc 20000").code == 0);
  CHECK(run("eta-check --k 1,2").code == 0);
  CHECK(run("oracle-compare --ell 5 --bound 200").code == 0);
  CHECK(run("pdissect --p 7 --target f1 --trunc 300").code == 0);
  const Run d = run("--json density 'dissect(bprime(5), 2, 1)' --mod 2 --checkpoints 10000 --trunc 10000");
  CHECK(d.code == 0);
  const auto doc = nlohmann::json::parse(d.out);
  CHECK(doc.at("results").at(0).at("checkpoints").at(0).at("delta") == "9949/10000");
  CHECK(run("nonsense").code == 2);
}
