#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#ifndef ISORES_CLI_PATH
#define ISORES_CLI_PATH "isores"
#endif

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path();
  const fs::path out = dir / ("isores_out_" + std::to_string(++counter) + ".txt");
  const fs::path err = dir / ("isores_err_" + std::to_string(counter) + ".txt");
  const std::string cmd = std::string(ISORES_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  CliResult result;
#ifdef _WIN32
  result.exit_code = status;
#else
  result.exit_code = WEXITSTATUS(status);
#endif
  result.out = slurp(out);
  result.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return result;
}

} // namespace

TEST_CASE("cli: profile output is byte-identical across runs") {
  const CliResult a = run_cli("profile --mu 2,3,-1,-2,-4");
  const CliResult b = run_cli("profile --mu 2,3,-1,-2,-4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"degree\": \"0\"") != std::string::npos);
  CHECK(a.out.find("\"genus_per_component\": \"1\"") != std::string::npos);
}

TEST_CASE("cli: scan output is byte-identical across runs and worker counts") {
  const CliResult a = run_cli("scan --max-sum-b 6 --jobs 1");
  const CliResult b = run_cli("scan --max-sum-b 6 --jobs 4");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);

  // the H(a,a,-2a,-1,-1) rows report chi = 2a
  CHECK(a.out.find("\n1,1,-2,-1,-1,2,-2,1,0,") != std::string::npos);
  CHECK(a.out.find("\n2,2,-4,-1,-1,4,-4,2,0,") != std::string::npos);

  // every row carries an even degree
  std::istringstream rows(a.out);
  std::string line;
  std::getline(rows, line);  // header
  int parsed = 0;
  while (std::getline(rows, line)) {
    // degree is the field after chi; count from the back (7 fixed columns)
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() >= 7);
    const long long degree = std::stoll(fields[fields.size() - 5]);
    CHECK(degree % 2 == 0);
    ++parsed;
  }
  CHECK(parsed > 100);
}

TEST_CASE("cli: exit codes follow the contract") {
  CHECK(run_cli("profile --mu 1,1,-1,-1").exit_code == 1);      // degree mismatch
  CHECK(run_cli("profile --mu not-a-mu").exit_code == 1);       // parse error
  CHECK(run_cli("nonsense").exit_code == 1);                    // usage
  CHECK(run_cli("chamber --mu 2,3,-1,-1,-1,-1,-1,-1,-1").exit_code == 3);  // p > 5
  CHECK(run_cli("graphs --mu 4,4,-6,-2,-2").exit_code == 3);    // graph bound
}

TEST_CASE("cli: xi reports closed form, oracle and recursion side by side") {
  const CliResult r = run_cli("xi --a1 4 --a2 4 --b 6,2,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"closed\": \"2\"") != std::string::npos);
  CHECK(r.out.find("\"oracle\": \"2\"") != std::string::npos);
  CHECK(r.out.find("\"all_equal\": true") != std::string::npos);
}

TEST_CASE("cli: components command") {
  const CliResult r = run_cli("components --mu 3,3,-6,-1,-1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"num_components\": 3") != std::string::npos);
}

TEST_CASE("cli: graphs command writes the dot export") {
  const fs::path dot = fs::temp_directory_path() / "isores_graphs.dot";
  const CliResult r =
      run_cli("graphs --mu 1,1,-1,-1,-1,-1 --positive-pole 1 --dot-out " + dot.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"zero_graphs\": 2") != std::string::npos);
  CHECK(r.out.find("\"adjacency_components\": 1") != std::string::npos);
  const std::string text = slurp(dot);
  CHECK(text.find("digraph g0") != std::string::npos);
  fs::remove(dot);
}

TEST_CASE("cli: verify exit codes and fault injection") {
  const CliResult small =
      run_cli("verify --scan-only --max-sum-b 5 --max-sum-b-xi 5 --max-genus-a 3 --jobs 2");
  CHECK(small.exit_code == 0);
  CHECK(small.out.find("all checks passed") != std::string::npos);

  const CliResult empty =
      run_cli("verify --scan-only --max-sum-b 0 --max-sum-b-xi 0 --max-genus-a 0");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.find("note: 0 checks") != std::string::npos);

  const CliResult corrupted = run_cli(
      "verify --scan-only --max-sum-b 4 --max-sum-b-xi 6 --max-genus-a 0 --inject-fault xi");
  CHECK(corrupted.exit_code == 2);
  CHECK(corrupted.out.find("FAIL criterion-01-xi-cross-oracle") != std::string::npos);
}
