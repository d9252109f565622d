#include "sakai/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace sakai;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sakai");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify lattice passes") {
  Run r = run({"verify", "lattice"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["check"] == "lattice");
  CHECK(j["passed"] == true);
  CHECK(j["max_residual"] == "0");
  CHECK(j.contains("details"));
}

TEST_CASE("verify weyl is deterministic for a fixed seed") {
  Run a = run({"verify", "weyl", "--seed", "7", "--trials", "100"});
  Run b = run({"verify", "weyl", "--seed", "7", "--trials", "100"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["seed"] == 7);
}

TEST_CASE("verify equivalence at one parameter set") {
  Run r = run({"verify", "equivalence", "--alpha", "1.5", "--beta", "0.5", "--s", "1", "--nmax", "6", "--prec", "40"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["passed"] == true);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"describe", "bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "ladder", "--alpha", "-0.5"}).code == 2);
  CHECK(run({"compute", "coeffs", "--alpha", "x"}).code == 2);
  CHECK(run({"compute", "orbit-std"}).code == 2);
  CHECK(run({"verify", "weyl", "--format", "xml"}).code == 2);
}

TEST_CASE("singular orbit reports the index and exits with 1") {
  Run r = run({"compute", "orbit-std", "--a", "1/2,1/4,1/8,1/8", "--t", "1", "--f", "2", "--g", "-1", "--nmax", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("index 0") != std::string::npos);
}

TEST_CASE("coefficient table") {
  Run r = run({"compute", "coeffs", "--alpha", "0", "--beta", "0", "--s", "0", "--nmax", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,h,alpha,beta,p\n", 0) == 0);
  CHECK(r.out.find("\n1,") != std::string::npos);
  CHECK(r.out.find("0.0833333333333") != std::string::npos);
}

TEST_CASE("CSV and JSON carry the same values") {
  std::vector<std::string> base{"compute", "orbit-rec", "--nmax", "4", "--prec", "30"};
  auto csv_args = base, json_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  Run c = run(csv_args), j = run(json_args);
  REQUIRE(c.code == 0);
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  std::vector<std::string> cols = doc["columns"];
  CHECK(std::find(cols.begin(), cols.end(), "x") != cols.end());
  CHECK(std::find(cols.begin(), cols.end(), "f") != cols.end());
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  std::size_t row = 0;
  while (std::getline(lines, line)) {
    std::string expected;
    for (std::size_t i = 0; i < cols.size(); ++i)
      expected += (i ? "," : "") + doc["rows"][row][cols[i]].get<std::string>();
    CHECK(line == expected);
    ++row;
  }
  CHECK(row == 4);
}

TEST_CASE("describe topics") {
  Run roots = run({"describe", "roots", "--surface", "recurrence", "--format", "csv"});
  CHECK(roots.code == 0);
  CHECK(roots.out.find("surface,delta0,Hx - F1 - F2") != std::string::npos);
  Run words = run({"describe", "words", "--format", "csv"});
  CHECK(words.out.find("s3 s2 w3 w1 w2 w0") != std::string::npos);
  CHECK(words.out.find("s3 s2 w1 w2 w0 w1") != std::string::npos);
  Run bp = run({"describe", "basepoints", "--surface", "standard", "--format", "csv"});
  for (int i = 1; i <= 8; ++i) CHECK(bp.out.find("\np" + std::to_string(i) + ",") != std::string::npos);
  CHECK(run({"describe", "rootvars"}).code == 0);
}
