#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cageforge/io_formats.hpp"
#include "cageforge/semiplane.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using cageforge::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cageforge_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_CASE("build summaries") {
  const Result r13 = call({"build", "--q", "13"});
  CHECK(r13.code == 0);
  CHECK(r13.out == "q=13 u=0 → 16-regular, girth 5, n=336, excess 79\n");

  const Result u1 = call({"build", "--q", "13", "--u", "1"});
  CHECK(u1.code == 0);
  CHECK(u1.out.find("15-regular") != std::string::npos);
  CHECK(u1.out.find("n=310") != std::string::npos);

  const Result q19 = call({"build", "--q", "19", "--u", "1"});
  CHECK(q19.code == 0);
  CHECK(q19.out.find("21-regular") != std::string::npos);
  CHECK(q19.out.find("n=682") != std::string::npos);
}

TEST_CASE("build errors") {
  const Result nine = call({"build", "--q", "9"});
  CHECK(nine.code == 2);
  CHECK(nine.err.find("supported q") != std::string::npos);
  CHECK(call({"build", "--q", "13", "--S", "1"}).code == 2);
  CHECK(call({"build", "--q", "13", "--S", "0", "--T", "0"}).code == 0);
  CHECK(call({"build", "--q", "13", "--u", "13"}).code == 2);
  CHECK(call({"build", "--q", "13", "--format", "dimacs"}).code == 2);
  CHECK(call({"build"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("build --no-cert marks output uncertified") {
  const Result r = call({"build", "--q", "13", "--no-cert"});
  CHECK(r.code == 0);
  CHECK(r.out.find("uncertified") != std::string::npos);
}

TEST_CASE("build writes files and verify reads them back") {
  const fs::path g6 = scratch("b17.g6");
  const fs::path cert = scratch("b17.json");
  REQUIRE(call({"build", "--q", "17", "--out", g6.string(), "--cert", cert.string()}).code == 0);
  CHECK(fs::file_size(cert) > 0);
  const Result v = call({"verify", g6.string(), "--expect-degree", "20", "--expect-girth", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.find("\"moore_bound\": 401") != std::string::npos);

  const fs::path edges = scratch("b13.edges");
  REQUIRE(call({"build", "--q", "13", "--format", "edges", "--out", edges.string()}).code == 0);
  std::ifstream in(edges);
  std::string first, second;
  std::getline(in, first);
  std::getline(in, second);
  CHECK(first == "# n=336");
  CHECK(second == "# q=13");
  CHECK(call({"verify", edges.string(), "--expect-order", "336"}).code == 0);

  // Deterministic bytes.
  const fs::path again = scratch("b17b.g6");
  REQUIRE(call({"build", "--q", "17", "--out", again.string()}).code == 0);
  std::ifstream a(g6), b(again);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
}

TEST_CASE("verify expectations and parse errors") {
  const fs::path b7 = scratch("b7.g6");
  write_file(b7, cageforge::to_graph6(cageforge::build_levi(7).graph()) + "\n");
  CHECK(call({"verify", b7.string(), "--expect-girth", "5"}).code == 1);
  CHECK(call({"verify", b7.string(), "--expect-girth", "6", "--expect-degree", "7"}).code == 0);

  const fs::path corrupt = scratch("corrupt.g6");
  write_file(corrupt, "Dh");
  CHECK(call({"verify", corrupt.string()}).code == 2);
  const fs::path bad_edges = scratch("bad.edges");
  write_file(bad_edges, "# n=3\n0 z\n");
  CHECK(call({"verify", bad_edges.string()}).code == 2);
  CHECK(call({"verify", scratch("missing.g6").string()}).code == 2);
}

TEST_CASE("weights") {
  const Result r31 = call({"weights", "--q", "31"});
  CHECK(r31.code == 0);
  CHECK(r31.out.find("P_ω={1,2,8,13,14,15}") != std::string::npos);
  CHECK(r31.out.find("DISJOINT") != std::string::npos);
  const Result r11 = call({"weights", "--q", "11"});
  CHECK(r11.out.find("P_ω={2,3,5}; L_ω={1,4}; DISJOINT") != std::string::npos);
  CHECK(call({"weights", "--q", "7"}).code == 2);
}

TEST_CASE("table") {
  const Result r19 = call({"table", "--qmax", "19"});
  CHECK(r19.code == 0);
  std::istringstream lines(r19.out);
  std::string header;
  std::getline(lines, header);
  std::vector<std::vector<long>> rows;
  for (std::string line; std::getline(lines, line);) {
    std::istringstream cols(line);
    std::vector<long> row;
    for (long x; cols >> x;) row.push_back(x);
    rows.push_back(row);
  }
  REQUIRE(rows.size() == 4);
  CHECK(rows[0][2] == 236);
  CHECK(rows[1][2] == 336);
  CHECK(rows[2][2] == 572);
  CHECK(rows[3][2] == 720);

  const Result r23 = call({"table", "--qmax", "23"});
  CHECK(r23.out.find("   23    26      1056       677       379") != std::string::npos);

  const Result r10 = call({"table", "--qmax", "10"});
  CHECK(r10.code == 0);
  CHECK(std::count(r10.out.begin(), r10.out.end(), '\n') == 1);
}

TEST_CASE("CAGEFORGE_MAX_Q lifts the cap") {
  CHECK(call({"weights", "--q", "263"}).code == 0);  // no graph built
  CHECK(call({"build", "--q", "263", "--no-cert"}).code == 2);
  ::setenv("CAGEFORGE_MAX_Q", "300", 1);
  const Result r = call({"table", "--qmax", "263"});
  ::unsetenv("CAGEFORGE_MAX_Q");
  CHECK(r.code == 0);
  CHECK(r.out.find("  263") != std::string::npos);
}
