// End-to-end tests of the CLI binary, driven over a pipe. The build passes
// the binary location as NSG_CLI_PATH.

#include <algorithm>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI through /bin/sh, capturing one of the two streams (data
// tests read stdout, diagnostics tests read stderr). An optional prefix
// sets environment variables with sh syntax, e.g. "VAR=value".
CommandResult run_cli(const std::string& args, bool capture_stderr = false,
                      const std::string& env_prefix = "") {
  const std::string redirect =
      capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";
  std::string command = std::string(NSG_CLI_PATH) + " " + args + redirect;
  if (!env_prefix.empty()) {
    command = env_prefix + " " + command;
  }
  CommandResult result;
  std::FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, n);
  }
  const int status = ::pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("construct reports the worked example") {
  const auto r = run_cli("construct --genus 6 --multiplicity 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "gaps: 1, 2, 3, 5, 6, 10"));
  CHECK(contains(r.output, "generators: 4, 7, 9"));
  CHECK(contains(r.output, "pseudo_symmetric: true"));
  CHECK(contains(r.output, "reflective: true"));
}

TEST_CASE("construct rejects a multiplicity dividing the genus") {
  const auto r = run_cli("construct --genus 6 --multiplicity 3", true);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "3 divides 6"));
}

TEST_CASE("construct classifies r = 1 as symmetric") {
  const auto r = run_cli("construct --genus 10 --multiplicity 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "symmetric: true"));
  CHECK(contains(r.output, "frobenius: 19"));
}

TEST_CASE("check reports reflectivity verdicts") {
  const auto not_reflective = run_cli("check 3,13");
  CHECK(not_reflective.exit_code == 0);
  CHECK(contains(not_reflective.output, "reflective: false"));

  const auto full = run_cli("check 1");
  CHECK(full.exit_code == 0);
  CHECK(contains(full.output, "genus: 0"));
  CHECK(contains(full.output, "reflective: true"));
  CHECK(contains(full.output, "frobenius: -1"));

  const auto reflective = run_cli("check 4,9,10,15");
  CHECK(reflective.exit_code == 0);
  CHECK(contains(reflective.output, "reflective: true"));
  CHECK(contains(reflective.output, "genus: 7"));
}

TEST_CASE("check maps domain and usage errors to distinct exit codes") {
  CHECK(run_cli("check 2,4", true).exit_code == 2);
  CHECK(run_cli("check 3,x", true).exit_code == 1);
  CHECK(run_cli("check 3,,5", true).exit_code == 1);
  CHECK(run_cli("check 0,3", true).exit_code == 2);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli("", true).exit_code == 1);
  CHECK(run_cli("frobnicate", true).exit_code == 1);
  CHECK(run_cli("count --mode bogus --range 1..5", true).exit_code == 1);
  CHECK(run_cli("count --mode genus --range 5", true).exit_code == 1);
  CHECK(run_cli("count --mode genus --range 9..2", true).exit_code == 1);
  CHECK(run_cli("count --mode genus --range 0..5", true).exit_code == 1);
  CHECK(run_cli("construct --genus 6", true).exit_code == 1);
  CHECK(run_cli("construct --genus 6 --multiplicity 4 --format yaml", true)
            .exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("count emits the requested table") {
  const auto r = run_cli("count --mode genus --range 1..12 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "param,exact\n1,1\n2,1\n3,2\n4,2\n5,4\n6,3\n7,6\n8,5\n9,7\n10,7\n"
        "11,10\n12,7\n");

  const auto with_oracle =
      run_cli("count --mode frobenius --range 6..6 --with-oracle --format csv");
  CHECK(with_oracle.exit_code == 0);
  CHECK(with_oracle.output == "param,exact,oracle\n6,1,1\n");
}

TEST_CASE("count output is deterministic") {
  const std::string args = "count --mode frobenius --range 1..30 --format json";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("oracle limit respects the environment override") {
  const auto r = run_cli("count --mode genus --range 10..10 --with-oracle",
                         true, "NSG_ORACLE_GENUS_LIMIT=5");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "limit"));

  const auto ok =
      run_cli("count --mode genus --range 10..10 --with-oracle --format csv",
              false, "NSG_ORACLE_GENUS_LIMIT=12");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output == "param,exact,oracle\n10,7,7\n");

  const auto garbage =
      run_cli("count --mode genus --range 4..4 --with-oracle --format csv",
              false, "NSG_ORACLE_GENUS_LIMIT=banana");
  CHECK(garbage.exit_code == 0);
  CHECK(garbage.output == "param,exact,oracle\n4,2,2\n");
}

TEST_CASE("plotdata emits exact counts with estimates") {
  const auto r = run_cli("plotdata --max-frobenius 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "param,exact,estimate\n1,1,0.306853\n");

  const auto table = run_cli("plotdata --max-frobenius 50 --format csv");
  CHECK(table.exit_code == 0);
  // 50 rows plus the header.
  CHECK(std::count(table.output.begin(), table.output.end(), '\n') == 51);
  CHECK(contains(table.output, "\n50,15,15.342641\n"));
}

TEST_CASE("json reports round-trip byte-identically") {
  for (const std::string& args :
       {std::string("check 4,9,10,15 --format json"),
        std::string("construct --genus 11 --multiplicity 4 --format json"),
        std::string("plotdata --max-frobenius 20 --format json"),
        std::string("count --mode genus --range 1..9 --with-oracle "
                    "--format json")}) {
    const auto r = run_cli(args);
    REQUIRE(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed.dump(2) + "\n" == r.output);
  }
}

TEST_CASE("csv and text formats carry the same report fields") {
  const auto csv = run_cli("check 4,7,9 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(contains(csv.output, "genus,frobenius,multiplicity"));
  CHECK(contains(csv.output, "4;7;9"));
  CHECK(contains(csv.output, "1;2;3;5;6;10"));
  CHECK(contains(csv.output, "5;10"));

  const auto text = run_cli("check 4,7,9 --format text");
  REQUIRE(text.exit_code == 0);
  CHECK(contains(text.output, "type: 2"));
  CHECK(contains(text.output, "wilf: true"));
}

TEST_CASE("verify passes and exits 0") {
  const auto r = run_cli("verify --max-genus 8");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "pass reflective count by genus (8 cases)"));
  CHECK(contains(r.output, "verification: pass"));

  const auto trivial = run_cli("verify --max-genus 0");
  CHECK(trivial.exit_code == 0);
  CHECK(contains(trivial.output, "verification: pass"));
}

TEST_CASE("verify rejects requests beyond the oracle limit") {
  const auto r = run_cli("verify --max-genus 30", true);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "limit"));
}
