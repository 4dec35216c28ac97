#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dehnlab/cli.hpp"

using namespace dehnlab;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path scratch(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / "dehnlab-cli-test";
    std::filesystem::create_directories(dir);
    return dir / name;
  }

  // Drops the trailing seconds column of a report.
  std::string without_seconds(std::string const& csv) {
    std::istringstream in(csv);
    std::string        line, out;
    while (std::getline(in, line)) {
      out += line.substr(0, line.rfind(',')) + '\n';
    }
    return out;
  }
}  // namespace

TEST_CASE("word problem") {
  auto r = run({"wp", "--group", "surface2", "--word", "[a1,b1][a2,b2]"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "trivial\n");
  CHECK(run({"wp", "--group", "surface2", "--word", "a1 b1"}).out == "nontrivial\n");
  CHECK(run({"wp", "--group", "k2", "--word", "a1 | a1^-1 b1"}).out == "nontrivial\n");
}

TEST_CASE("area") {
  auto path = scratch("cert.txt").string();
  auto r    = run({"area", "--group", "z2", "--word", "[a^2,b^2]", "--out", path});
  CHECK(r.code == exit_ok);
  CHECK(r.out.rfind("area=4\n", 0) == 0);
  CHECK(r.out.find("certificate=" + path) != std::string::npos);
  std::ifstream cert(path);
  std::string   first;
  std::getline(cert, first);
  CHECK(first.rfind("word ", 0) == 0);

  auto tight = run({"area", "--group", "z2", "--word", "[a^3,b^3]", "--max-states", "5",
                    "--out", path});
  CHECK(tight.code == exit_inconclusive);
  CHECK(tight.out.rfind("inconclusive", 0) == 0);
  CHECK(run({"area", "--group", "z2", "--word", "[a^3,b^3]", "--max-states", "5",
             "--allow-inconclusive", "--out", path})
            .code
        == exit_ok);
  CHECK(run({"area", "--group", "z2", "--word", "a", "--out", path}).code == exit_failure);
  CHECK(run({"area", "--group", "surface2", "--word", "[a1,b1][a2,b2]", "--greedy",
             "--out", path})
            .out.rfind("area=1 (upper bound)", 0)
        == 0);
  CHECK(run({"area", "--group", "k2", "--word", "e | e", "--out", path}).code
        == exit_usage);
}

TEST_CASE("lengths, balls and fits") {
  CHECK(run({"length", "--group", "k2", "--word", "[a1,b2] | e"}).out == "length=5\n");
  CHECK(run({"length", "--group", "k2", "--word", "a1 | e"}).code == exit_usage);

  auto ball = run({"ball", "--group", "surface2", "--radius", "3"});
  CHECK(ball.out == "radius,sphere,ball\n0,1,1\n1,8,9\n2,56,65\n3,392,457\n");

  auto csv = scratch("growth.csv");
  CHECK(run({"ball", "--group", "z2", "--radius", "8", "--out", csv.string()}).code == exit_ok);
  auto fit = run({"growth-fit", "--in", csv.string()});
  CHECK(fit.code == exit_ok);
  CHECK(fit.out.rfind("slope=1.000000\n", 0) == 0);
}

TEST_CASE("distortion") {
  auto r = run({"distortion", "--group", "k2", "--max-n", "1", "--radius", "2"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.rfind("n,delta,witness\n0,0,", 0) == 0);
  CHECK(run({"distortion", "--group", "surface2"}).code == exit_usage);
}

TEST_CASE("exponent") {
  CHECK(run({"exponent", "--factors", "3", "--hyperbolic", "--rank", "2"}).out == "6\n");
  CHECK(run({"exponent", "--factors", "3", "--alpha", "2", "--rho", "3/2"}).out == "8\n");
  auto r = run({"exponent", "--factors", "2", "--hyperbolic"});
  CHECK(r.code == exit_usage);
  CHECK(r.err.find("three factors") != std::string::npos);
}

TEST_CASE("verify-paper") {
  auto dir = scratch("report");
  auto a   = run({"verify-paper", "--only", "3", "4", "11", "--seed", "5", "--out",
                  dir.string()});
  CHECK(a.code == exit_ok);
  CHECK(std::filesystem::exists(dir / "report.csv"));
  auto b = run({"verify-paper", "--only", "3", "4", "11", "--seed", "5"});
  CHECK(without_seconds(a.out) == without_seconds(b.out));
  CHECK(run({"verify-paper", "--only", "13"}).code == exit_usage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"wp", "--group", "surface2"}).code == exit_usage);
  CHECK(run({"wp", "--group", "nope", "--word", "a"}).code == exit_usage);
  CHECK(run({"wp", "--group", "surface2", "--word", "a1 ^"}).code == exit_usage);
  CHECK(run({"area", "--word", "a1", "--max-states", "0"}).code == exit_usage);
  CHECK(run({"--help"}).code == exit_ok);
}
