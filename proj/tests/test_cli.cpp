#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "calambda/construct.hpp"
#include "calambda/verify.hpp"
#include "cli.hpp"

using namespace calambda;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "calambda_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("bounds command") {
  const auto table = run({"bounds", "-t", "6", "-k", "10", "-v", "7", "-l", "2", "--method", "two_stage_l2_w"});
  CHECK(table.code == cli::kExitOk);
  CHECK(table.out.find("rows 1089371") != std::string::npos);

  const auto small = run({"bounds", "-t", "2", "-k", "3", "-v", "2", "-l", "1", "--method", "slj_exact"});
  CHECK(small.code == cli::kExitOk);
  CHECK(small.out.find("slj_exact_min: rows 9") != std::string::npos);

  const auto bad = run({"bounds", "-t", "1", "-k", "3", "-v", "2"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("t >= 2") != std::string::npos);

  CHECK(run({"bounds", "-t", "2", "-k", "3", "-v", "2", "-m", "bogus"}).code == cli::kExitUsage);
  CHECK(run({"nonsense"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
}

TEST_CASE("bounds command JSON output") {
  const auto r = run({"bounds", "-t", "2", "-k", "3", "-v", "2", "--json", "-m", "slj_w", "-m", "slj_exact"});
  REQUIRE(r.code == cli::kExitOk);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  const auto w = nlohmann::json::parse(lines[0]);
  CHECK(w["method"] == "slj_upper_w");
  CHECK(w["rows"] == 22);
  CHECK(w.contains("w_argument"));
  CHECK(nlohmann::json::parse(lines[1])["rows"] == 9);

  const auto best = run({"bounds", "-t", "2", "-k", "3", "-v", "2", "--best", "--json"});
  CHECK(nlohmann::json::parse(best.out)["method"] == "coloring_bound_min");
  CHECK(nlohmann::json::parse(best.out)["rows"] == 6);
}

TEST_CASE("sweep command") {
  const auto r = run({"sweep", "-t", "2", "-v", "2", "-l", "2", "--k-start", "2", "--k-end", "30", "--k-step", "4"});
  REQUIRE(r.code == cli::kExitOk);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] ==
        "k,slj_no_sum_no_W,slj_no_sum_with_W,slj_with_sum,lll_no_sum_no_W,lll_no_sum_with_W,lll_with_sum,"
        "two_stage_no_sum_no_W,two_stage_no_sum_with_W,two_stage_with_sum,two_stage_coloring");
  CHECK(lines[1].rfind("2,", 0) == 0);

  // The per-family chain holds in every emitted row.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<long long> cells;
    std::istringstream in(lines[i]);
    for (std::string cell; std::getline(in, cell, ',');) cells.push_back(std::stoll(cell));
    REQUIRE(cells.size() == 11);
    for (int family = 0; family < 3; ++family) {
      const long long elementary = cells[1 + 3 * family], w = cells[2 + 3 * family], exact = cells[3 + 3 * family];
      CHECK(exact <= w);
      CHECK(w <= elementary);
    }
  }

  const auto single = run({"sweep", "-t", "2", "-v", "2", "--k-start", "5", "--k-end", "5", "-m", "slj_exact"});
  CHECK(split_lines(single.out) == std::vector<std::string>{"k,slj_with_sum", "5,13"});

  const auto serial = run({"sweep", "-t", "3", "-v", "2", "-l", "3", "--k-start", "3", "--k-end", "40", "-j", "1"});
  const auto parallel = run({"sweep", "-t", "3", "-v", "2", "-l", "3", "--k-start", "3", "--k-end", "40", "-j", "4"});
  CHECK(serial.out == parallel.out);

  CHECK(run({"sweep", "-t", "2", "-v", "2", "--k-start", "9", "--k-end", "5"}).code == cli::kExitUsage);
}

TEST_CASE("sweep writes to a file") {
  const auto path = scratch("sweep.csv");
  const auto r = run({"sweep", "-t", "2", "-v", "2", "--k-start", "2", "--k-end", "4", "-o", path.string()});
  CHECK(r.code == cli::kExitOk);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header.rfind("k,", 0) == 0);

  const auto bad = run({"sweep", "-t", "2", "-v", "2", "--k-start", "2", "--k-end", "4", "-o", "/nonexistent/dir/x.csv"});
  CHECK(bad.code != cli::kExitOk);
  CHECK(bad.err.find("/nonexistent/dir/x.csv") != std::string::npos);
}

TEST_CASE("construct and verify commands") {
  const auto path = scratch("density.txt");
  const auto r = run({"construct", "-t", "2", "-k", "5", "-v", "2", "-l", "2", "--algorithm", "density", "--seed", "7",
                      "-o", path.string()});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("verified CA_2") != std::string::npos);

  CHECK(run({"verify", path.string()}).code == cli::kExitOk);
  CHECK(run({"verify", path.string(), "-l", "1"}).code == cli::kExitOk);
  CHECK(run({"verify", path.string(), "-l", "50"}).code == cli::kExitNotVerified);

  for (const char* algorithm : {"moser-tardos", "two-stage", "two-stage-coloring", "juxtapose"}) {
    const auto c = run({"construct", "-t", "2", "-k", "4", "-v", "2", "-l", "2", "-a", algorithm});
    CHECK(c.code == cli::kExitOk);
    std::istringstream in(c.out);
    CHECK(is_ca_lambda(read_array(in)));
  }
}

TEST_CASE("construct command with stdout output") {
  const auto r = run({"construct", "-t", "2", "-k", "4", "-v", "2", "-a", "density", "--json"});
  CHECK(r.code == cli::kExitOk);
  std::istringstream in(r.out);
  const auto array = read_array(in);
  const auto summary = nlohmann::json::parse(r.err);
  CHECK(summary["verified"] == true);
  CHECK(summary["rows"] == array.rows);
}

TEST_CASE("random construction below the row floor") {
  const auto r = run({"construct", "-t", "2", "-k", "4", "-v", "2", "-l", "2", "-a", "random", "-N", "5"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("construct command errors") {
  CHECK(run({"construct", "-t", "2", "-k", "4", "-v", "2", "-a", "quantum"}).code == cli::kExitUsage);
  CHECK(run({"construct", "-t", "2", "-k", "1", "-v", "2", "-a", "density"}).code == cli::kExitUsage);
  int exhausted = 0;
  for (int seed = 1; seed <= 20; ++seed) {
    const int code = run({"construct", "-t", "3", "-k", "9", "-v", "2", "-l", "3", "-a", "moser-tardos",
                          "--max-resamples", "0", "-s", std::to_string(seed)})
                         .code;
    CHECK((code == cli::kExitOk || code == cli::kExitBudget));
    exhausted += code == cli::kExitBudget;
  }
  CHECK(exhausted > 0);
}

TEST_CASE("interaction cap from the environment") {
  ::setenv("CA_LAMBDA_CAP", "10", 1);
  const auto r = run({"construct", "-t", "2", "-k", "4", "-v", "2", "-a", "density"});
  ::unsetenv("CA_LAMBDA_CAP");
  CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("verify command") {
  const auto path = scratch("factorial.txt");
  {
    std::ofstream f(path);
    f << "4 2 2 2 1\n0 0\n0 1\n1 0\n1 1\n";
  }
  CHECK(run({"verify", path.string()}).code == cli::kExitOk);
  CHECK(run({"verify", path.string(), "-l", "2"}).code == cli::kExitNotVerified);
  const auto j = run({"verify", path.string(), "--json"});
  CHECK(nlohmann::json::parse(j.out)["min_coverage"] == 1);

  const auto bad = scratch("malformed.txt");
  {
    std::ofstream f(bad);
    f << "4 2 2 2 1\n0 0\n0 7\n";
  }
  CHECK(run({"verify", bad.string()}).code == cli::kExitUsage);
  CHECK(run({"verify", scratch("missing.txt").string()}).code == cli::kExitUsage);
}

TEST_CASE("max-lambda command") {
  const auto r = run({"max-lambda", "-N", "30", "-t", "2", "-k", "3", "-v", "2", "-m", "w"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("lambda 1 ", 0) == 0);

  const auto range = run({"max-lambda", "-N", "1", "-t", "2", "-k", "3", "-v", "2"});
  CHECK(range.code == cli::kExitUsage);
  CHECK(range.err.find("b out of range") != std::string::npos);
  CHECK(range.err.find("b >= 1") != std::string::npos);

  CHECK(run({"max-lambda", "-N", "30", "-t", "2", "-k", "3", "-v", "2", "-m", "elementary"}).code == cli::kExitOk);
  CHECK(run({"max-lambda", "-N", "30", "-t", "2", "-k", "3", "-v", "2", "-m", "lll"}).code == cli::kExitOk);
  CHECK(run({"max-lambda", "-N", "30", "-t", "2", "-k", "3", "-v", "2", "-m", "other"}).code == cli::kExitUsage);
}
