#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <unistd.h>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(HYPOSIGN_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  CommandResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n = 0;
  while ((n = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), n);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempCatalog {
  fs::path path;
  TempCatalog()
      : path(fs::temp_directory_path() /
             ("hyposign-cli-test-" + std::to_string(::getpid()) + ".jsonl")) {
    fs::remove(path);
  }
  ~TempCatalog() { fs::remove(path); }
};

}  // namespace

TEST_CASE("classify emits schema-stable JSON") {
  const CommandResult r = run_cli("classify \"S{1,3,1,1,1}\" --json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("pattern").at("first") == "+---+-+");
  CHECK(doc.at("degree") == 6);
  CHECK(doc.at("type1") == true);
  CHECK(doc.at("type2") == true);
  CHECK(doc.at("canonicalOrder") == "PPPNNP");
  CHECK(doc.at("verdict").at("status") == "certified-canonical");
  CHECK(doc.at("counts").at("changes") == 4);
}

TEST_CASE("classify exit codes") {
  CHECK(run_cli("classify \"+-\"").exit_code == 0);
  CHECK(run_cli("classify \"+\"").exit_code == 1);
  CHECK(run_cli("classify \"garbage{\"").exit_code == 1);
  CHECK(run_cli("bogus-subcommand").exit_code == 1);
}

TEST_CASE("construct canonical stores to the catalog and is valid JSON") {
  TempCatalog catalog;
  const CommandResult r = run_cli("construct \"S{1,2,1}\" --mode canonical --json --catalog " +
                                  catalog.path.string());
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0].at("word") == "PNP");
  CHECK(doc[0].at("pattern") == "+--+");
  CHECK(fs::exists(catalog.path));

  // pair mode on a type 2 pattern is a usage error
  CHECK(run_cli("construct \"S{1,3,1}\" --mode pair --no-store").exit_code == 1);

  // pair mode on the cubic family works without a catalog
  const CommandResult pair = run_cli("construct \"S{1,2,1}\" --mode pair --json --no-store");
  REQUIRE(pair.exit_code == 0);
  const json pair_doc = json::parse(pair.out);
  REQUIRE(pair_doc.size() == 2);
  CHECK(pair_doc[0].at("word") != pair_doc[1].at("word"));
}

TEST_CASE("explore reports every word and exits zero even when inconclusive") {
  const CommandResult r =
      run_cli("explore \"S{1,3,1}\" --budget 5 --seed 7 --json --no-store");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("sp") == "+---+");
  CHECK(doc.at("config").at("budget") == 5);
  CHECK(doc.at("config").at("seed") == 7);
  REQUIRE(doc.at("words").size() == 6);  // d = 4, c = 2: C(4,2) words
  int found = 0;
  for (const auto& entry : doc.at("words")) {
    CHECK(entry.contains("status"));
    CHECK(entry.contains("restartsUsed"));
    if (entry.at("status") == "found") {
      ++found;
      CHECK(entry.contains("witness"));
    }
  }
  CHECK(found >= 1);  // at least the canonical word
}

TEST_CASE("explore honors HYPOSIGN_CATALOG") {
  TempCatalog catalog;
  ::setenv("HYPOSIGN_CATALOG", catalog.path.string().c_str(), 1);
  const CommandResult r = run_cli("explore \"S{1,2,1}\" --budget 20 --seed 7");
  ::unsetenv("HYPOSIGN_CATALOG");
  REQUIRE(r.exit_code == 0);
  CHECK(fs::exists(catalog.path));
}

TEST_CASE("verify suites: pass and fail exit codes") {
  CHECK(run_cli("verify lemma1 --lmax 40").exit_code == 0);
  CHECK(run_cli("verify theorem3 --r 2 --delta 5").exit_code == 0);
  CHECK(run_cli("verify canonical-builder --maxd 4").exit_code == 0);
  CHECK(run_cli("verify involutions --maxlen 6 --cases 20").exit_code == 0);
  CHECK(run_cli("verify lemma1 --lmax 5000").exit_code == 1);   // out of range
  CHECK(run_cli("verify theorem3 --r 2 --delta 4").exit_code == 1);  // side required
  CHECK(run_cli("verify nonsense").exit_code == 1);
}

TEST_CASE("verify --json emits per-check records") {
  const CommandResult r = run_cli("verify lemma1 --lmax 10 --json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("suite") == "lemma1");
  CHECK(doc.at("failed") == 0);
  REQUIRE(doc.at("checks").size() == 9);
  CHECK(doc.at("checks")[0].at("name") == "ell=2");
  CHECK(doc.at("checks")[0].at("pass") == true);
}
