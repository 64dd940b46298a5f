#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nagell/cli.hpp"
#include "nagell/report.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = nagell::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(NAGELL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("pell subcommand") {
  auto r = run({"pell", "8", "--count", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "(3, 1)"));
  CHECK(has(r.out, "(17, 6)"));
  r = run({"pell", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "fundamental: (2, 1)"));
  r = run({"pell", "4"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "square"));
  CHECK(run({"pell", "1"}).code == 2);
  CHECK(run({"pell", "abc"}).code == 2);
  r = run({"pell", "61", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nagell::Json::parse(r.out);
  CHECK(j["fundamental"]["x"] == "1766319049");
}

TEST_CASE("gpell subcommand") {
  auto r = run({"gpell", "8", "8", "--v-limit", "50"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "(4, 1) ambiguous"));
  CHECK(has(r.out, "(116, 41)"));
  r = run({"gpell", "3", "8"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "no solutions"));
  r = run({"gpell", "8", "-8", "--v-limit", "10", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nagell::Json::parse(r.out);
  CHECK(j["solutions"].size() == 2);
  CHECK(j["solutions"][0]["u"] == "0");
  CHECK(j["solutions"][1]["u"] == "8");
  CHECK(j["solutions"][1]["v"] == "3");
  CHECK(run({"gpell", "8", "0"}).code == 2);
  CHECK(run({"gpell", "9", "8"}).code == 2);
}

TEST_CASE("solve subcommand") {
  auto r = run({"solve", "--k", "6", "--n", "3", "--sign", "+", "--bound", "100"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "status: infinite"));
  for (const char* p : {"(1, 7)", "(7, 1)", "(7, 41)", "(41, 7)"}) CHECK(has(r.out, p));
  r = run({"solve", "--k", "8", "--n", "3", "--sign", "plus"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "status: empty"));
  r = run({"solve", "--k", "10", "--n", "3", "--sign", "minus", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nagell::Json::parse(r.out);
  CHECK(j["status"] == "infinite");
  CHECK(j["solutions"][0]["x"] == "1");
  CHECK(j["solutions"][0]["y"] == "1");
  CHECK(j["generators"]["vieta_bases"].size() == 1);
  CHECK(run({"solve", "--k", "-2", "--n", "3", "--sign", "+"}).code == 2);
  CHECK(run({"solve", "--k", "6", "--n", "3", "--sign", "x"}).code == 2);
  CHECK(run({"solve", "--k", "6", "--sign", "+"}).code == 2);
}

TEST_CASE("tables subcommand") {
  auto r = run({"tables", "--n-max", "3", "--sign", "-", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind(nagell::kCsvHeader, 0) == 0);
  CHECK(has(r.out, "3,10,-,true,true,1,1"));
  r = run({"tables", "--n-max", "3"});
  CHECK(has(r.out, "n=3 (k <= 18): solvable {6}"));
  CHECK(run({"tables", "--n-max", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("verify subcommand") {
  auto r = run({"verify", "--theorem", "3.1", "--n-max", "9"});
  CHECK(r.code == 0);
  auto reports = nagell::load_reports(r.out);
  REQUIRE(reports.size() == 2);
  for (const auto& c : reports) {
    CHECK(c.verdict == nagell::Verdict::pass);
    CHECK(nagell::reverify(c).empty());
  }

  r = run({"verify", "--theorem", "sharpness", "--n-max", "12"});
  CHECK(r.code == 0);
  reports = nagell::load_reports(r.out);
  REQUIRE(reports.size() == 1);
  CHECK(has(r.out, "\"x\": \"4095\""));

  r = run({"verify", "--theorem", "3.3", "--n-max", "7", "--p-max", "100"});
  CHECK(r.code == 0);
  reports = nagell::load_reports(r.out);
  REQUIRE(reports.size() == 2);
  CHECK(reports[1].verdict == nagell::Verdict::report_only);

  r = run({"verify", "--theorem", "3.2", "--n-max", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "3,4,-,true,false,2,2"));

  CHECK(run({"verify", "--theorem", "4.0"}).code == 2);
  CHECK(run({"verify", "--theorem", "3.1", "--n-max", "0"}).code == 2);
  CHECK(run({"verify", "--theorem", "3.1", "--format", "yaml"}).code == 2);
}

TEST_CASE("verify writes reports to a file deterministically") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = (dir / "nagell_verify_a.json").string();
  const auto b = (dir / "nagell_verify_b.json").string();
  CHECK(run({"verify", "--theorem", "all", "--n-max", "7", "--output", a}).code == 0);
  CHECK(run({"verify", "--theorem", "all", "--n-max", "7", "--output", b}).code == 0);
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string first = slurp(a);
  CHECK_FALSE(first.empty());
  CHECK(first == slurp(b));
  CHECK(nagell::load_reports(first).size() == 7);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("binary exit codes") {
  CHECK(run_binary("pell 8 --count 2") == 0);
  CHECK(run_binary("pell 4") == 2);
  CHECK(run_binary("gpell 8 -8 --v-limit 10") == 0);
  CHECK(run_binary("solve --k -1 --n 3 --sign +") == 2);
  CHECK(run_binary("verify --theorem 3.1 --n-max 9") == 0);
  CHECK(run_binary("verify --theorem bogus") == 2);
  CHECK(run_binary("frobnicate") == 2);
  CHECK(run_binary("") == 2);
}
