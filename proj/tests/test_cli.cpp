#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = horn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "horncount-cli-test") {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

using json = nlohmann::json;

TEST_SUITE("cli") {
  TEST_CASE("count") {
    auto r = cli({"count", "--n", "5", "--variant", "h", "--method", "dpll"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "1373701");
    CHECK(r.out.find("1,373,701") != std::string::npos);

    r = cli({"count", "--n", "3", "--variant", "h1", "--method", "bruteforce"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "61");

    r = cli({"count", "--n", "2", "--variant", "h01", "--method", "identity"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "14");
  }

  TEST_CASE("count --json is parseable and stable") {
    const auto r = cli({"count", "--n", "4", "--variant", "h1", "--json", "--components"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "count");
    CHECK(j["n"] == 4);
    CHECK(j["variant"] == "h1");
    CHECK(j["method"] == "dpll");
    CHECK(j["count"] == "2480");
    CHECK(j["stats"]["components"].get<int>() > 0);
    CHECK(j.contains("elapsed_seconds"));
    CHECK(json::parse(j.dump()) == j);
  }

  TEST_CASE("exit codes") {
    CHECK(cli({}).code == horn::cli::kUsage);
    CHECK(cli({"count", "--n", "2"}).code == horn::cli::kUsage);
    CHECK(cli({"count", "--n", "2", "--variant", "h2"}).code == horn::cli::kUsage);
    CHECK(cli({"count", "--n", "2", "--variant", "h", "--method", "magic"}).code ==
          horn::cli::kUsage);
    CHECK(cli({"frobnicate"}).code == horn::cli::kUsage);
    CHECK(cli({"--help"}).code == 0);

    auto r = cli({"count", "--n", "5", "--variant", "h", "--method", "bruteforce"});
    CHECK(r.code == horn::cli::kResource);
    CHECK(r.out.empty());
    CHECK(r.err.find("n <= 4") != std::string::npos);

    r = cli({"count", "--n", "7", "--variant", "h"});
    CHECK(r.code == horn::cli::kResource);

    r = cli({"count", "--n", "6", "--variant", "h", "--budget-seconds", "0.05"});
    CHECK(r.code == horn::cli::kResource);
    CHECK(r.out.empty());

    r = cli({"count", "--n", "5", "--variant", "h", "--method", "bruteforce", "--json"});
    CHECK(r.code == horn::cli::kResource);
    const json j = json::parse(r.out);
    CHECK(j["error"]["kind"] == "resource");
  }

  TEST_CASE("encode reproduces the DIMACS examples") {
    auto r = cli({"encode", "--n", "2", "--variant", "h01"});
    CHECK(r.code == 0);
    CHECK(r.out == "c variant=h01 n=2\np cnf 4 1\n-2 -3 1 0\n");
    r = cli({"encode", "--n", "2", "--variant", "h1"});
    CHECK(r.out == "c variant=h1 n=2\np cnf 4 2\n4 0\n-2 -3 1 0\n");
    r = cli({"encode", "--n", "0", "--variant", "h01"});
    CHECK(r.out == "c variant=h01 n=0\np cnf 1 0\n");

    TempDir dir;
    r = cli({"encode", "--n", "3", "--variant", "h", "--out", dir.path("h3.cnf"), "--json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["ternary_clauses"] == 9);
    CHECK(j["unit_clauses"] == 2);
    CHECK(read(dir.path("h3.cnf")) == read(std::string(GOLDEN_DIR) + "/n3_h.cnf"));
  }

  TEST_CASE("translate") {
    TempDir dir;
    const auto eqs = dir.file("eqs.txt", "x1 x2 = x1\nx3 = 1\nx1 x2 = 0\n1 = 0\n");
    auto r = cli({"translate", "--direction", "to-clauses", "--in", eqs, "--verify", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "-> false\n-> x3\nx1 -> x2\nx1 & x2 -> false\n# models match: yes\n");

    const auto clauses = dir.file("clauses.txt", "x1 & x2 -> x3\n-> x2\nx1 -> false\n");
    r = cli({"translate", "--direction", "to-equations", "--in", clauses, "--json", "--verify",
             "--n", "3"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["output"] == "x1 = 0\n1 = x2\nx1 x2 = x1 x2 x3\n");
    CHECK(j["models_match"] == true);

    r = cli({"translate", "--direction", "to-clauses", "--in", eqs, "--verify"});
    CHECK(r.code == horn::cli::kUsage);
    r = cli({"translate", "--direction", "to-clauses", "--in", eqs, "--verify", "--n", "2"});
    CHECK(r.code == horn::cli::kUsage);  // x3 is out of range for n = 2
    const auto bad = dir.file("bad.txt", "x1 = = x2\n");
    r = cli({"translate", "--direction", "to-clauses", "--in", bad});
    CHECK(r.code == horn::cli::kUsage);
    CHECK(r.err.find("line 1, column 6") != std::string::npos);
    r = cli({"translate", "--direction", "sideways", "--in", bad});
    CHECK(r.code == horn::cli::kUsage);
  }

  TEST_CASE("check") {
    TempDir dir;
    auto r = cli({"check", dir.file("full.txt", "00\n01\n10\n11\n")});
    CHECK(r.code == 0);
    CHECK(r.out.find("meet-closed: yes") != std::string::npos);
    CHECK(r.out.find("member of H: yes") != std::string::npos);

    r = cli({"check", dir.file("pair.txt", "01\n10\n"), "--json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["meet_closed"] == false);
    CHECK(j["closure"] == "00\n01\n10\n");
    CHECK(j["variants"]["h01"] == false);

    r = cli({"check", dir.file("empty.txt", "# nothing\n"), "--n", "2", "--json"});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["meet_closed"] == true);
    CHECK(j["variants"]["h01"] == true);
    CHECK(j["variants"]["h1"] == false);

    CHECK(cli({"check", dir.path("missing.txt")}).code == horn::cli::kUsage);
  }

  TEST_CASE("orbits") {
    auto r = cli({"orbits", "--n", "2", "--variant", "h", "--json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["labeled"] == 4);
    CHECK(j["nonisomorphic"] == 3);
    CHECK(j["reference"].is_null());

    r = cli({"orbits", "--n", "2", "--variant", "h", "--reference", "1,1,2"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(cli({"orbits", "--n", "5", "--variant", "h"}).code == horn::cli::kResource);
  }

  TEST_CASE("verify") {
    auto r = cli({"verify", "--n-max", "0"});
    CHECK(r.code == 0);
    r = cli({"verify", "--n-max", "4", "--json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["counts"]["h"] == json::array({"1", "1", "4", "45", "2271"}));
    CHECK(j["counts"]["h01"] == json::array({"2", "4", "14", "122", "4960"}));
    for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
    CHECK(cli({"verify", "--n-max", "7"}).code == horn::cli::kResource);
  }

  TEST_CASE("count-dimacs") {
    TempDir dir;
    const auto path = dir.file("f.cnf", "p cnf 3 2\n1 2 0\n-1 0\n");
    auto r = cli({"count-dimacs", path});
    CHECK(r.code == 0);
    CHECK(r.out == "s mc 2\n");
    CHECK(cli({"count-dimacs", dir.file("bad.cnf", "p cnf 1 1\n2 0\n")}).code ==
          horn::cli::kUsage);
  }

  TEST_CASE("external counter integration") {
    const std::string self = std::string(HORNCOUNT_BIN) + " count-dimacs {}";
    auto r = cli({"count", "--n", "4", "--variant", "h1", "--method", "external",
                  "--external-cmd", self});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "2480");

    r = cli({"count", "--n", "3", "--variant", "h", "--method", "external", "--external-cmd",
             self + " --json", "--external-pattern", R"re("count": "(\d+)")re"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "45");

    r = cli({"count", "--n", "2", "--variant", "h", "--method", "external", "--external-cmd",
             "false"});
    CHECK(r.code == horn::cli::kExternal);
    CHECK(r.out.empty());

    r = cli({"count", "--n", "2", "--variant", "h", "--method", "external", "--external-cmd",
             "echo no count here #"});
    CHECK(r.code == horn::cli::kExternal);
    CHECK(r.err.find("no count here") != std::string::npos);

    ::unsetenv("HORN_EXTERNAL_CMD");
    CHECK(cli({"count", "--n", "2", "--variant", "h", "--method", "external"}).code ==
          horn::cli::kUsage);
    ::setenv("HORN_EXTERNAL_CMD", self.c_str(), 1);
    r = cli({"count", "--n", "2", "--variant", "h1", "--method", "external"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "7");
    ::unsetenv("HORN_EXTERNAL_CMD");
  }
}
