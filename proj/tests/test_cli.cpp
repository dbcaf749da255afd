#include <catch_amalgamated.hpp>

#include <spaceform/cli.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace spaceform;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << content;
  return p;
}

}  // namespace

TEST_CASE("count matches the documented line format") {
  RunResult r = run_cli({"count", "--max-order", "8"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "1:1 2:1 3:1 4:1 5:1 6:1 7:1 8:2\n");

  RunResult csv = run_cli({"count", "--max-order", "4", "--format", "csv"});
  REQUIRE(csv.code == 0);
  REQUIRE(csv.out == "order,count\n1,1\n2,1\n3,1\n4,1\n");
}

TEST_CASE("enumerate lists sorted canonical tuples") {
  RunResult r = run_cli({"enumerate", "--max-order", "8"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> all;
  while (std::getline(lines, line)) all.push_back(line);
  REQUIRE(all.size() == 9);
  REQUIRE(all.front() == "TYPE=I;g=1;a=1;Gbar=[];b=1;t=1");
  REQUIRE(all.back() == "TYPE=II;g=8;a=1;Gbar=[];b=1;t=8");

  RunResult only2 = run_cli({"enumerate", "--max-order", "16", "--type", "II"});
  REQUIRE(only2.code == 0);
  std::istringstream l2(only2.out);
  int count = 0;
  while (std::getline(l2, line)) {
    REQUIRE(line.rfind("TYPE=II;", 0) == 0);
    ++count;
  }
  REQUIRE(count == 2);  // Q8 and Q16
}

TEST_CASE("build then classify round trips through files") {
  auto table = temp_file("spaceform_q8.tbl", "");
  RunResult b = run_cli({"build", "--tuple", "TYPE=II;g=8;a=1;Gbar=[];b=1;t=8", "--out",
                         table.string()});
  REQUIRE(b.code == 0);
  RunResult c = run_cli({"classify", "--in", table.string()});
  REQUIRE(c.code == 0);
  REQUIRE(c.out == "TYPE=II;g=8;a=1;Gbar=[];b=1;t=8\n");

  RunResult cp = run_cli({"classify", "--in", table.string(), "--paranoid"});
  REQUIRE(cp.code == 0);
  REQUIRE(cp.out == c.out);
  std::filesystem::remove(table);
}

TEST_CASE("classify rejects with REJECT and exit 1") {
  // 2 x 2: the Klein four group
  auto table = temp_file("spaceform_v4.tbl", "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
  RunResult r = run_cli({"classify", "--in", table.string()});
  REQUIRE(r.code == 1);
  REQUIRE(r.out.rfind("REJECT multiple_involutions", 0) == 0);
  std::filesystem::remove(table);
}

TEST_CASE("iso compares two built groups") {
  auto t1 = temp_file("spaceform_a.tbl", "");
  auto t2 = temp_file("spaceform_b.tbl", "");
  run_cli({"build", "--tuple", "TYPE=II;g=8;a=1;Gbar=[];b=1;t=8", "--out", t1.string()});
  run_cli({"build", "--tuple", "TYPE=I;g=8;a=1;Gbar=[];b=1;t=8", "--out", t2.string()});
  RunResult same = run_cli({"iso", t1.string(), t1.string()});
  REQUIRE(same.code == 0);
  REQUIRE(same.out == "ISOMORPHIC\n");
  RunResult diff = run_cli({"iso", t1.string(), t2.string()});
  REQUIRE(diff.code == 1);
  REQUIRE(diff.out == "NOT ISOMORPHIC\n");
  std::filesystem::remove(t1);
  std::filesystem::remove(t2);
}

TEST_CASE("rep prints a certificate report") {
  RunResult r = run_cli({"rep", "--tuple", "TYPE=II;g=8;a=1;Gbar=[];b=1;t=8"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("dimension: 4") != std::string::npos);
  REQUIRE(r.out.find("verdict: free") != std::string::npos);

  RunResult dumped =
      run_cli({"rep", "--tuple", "TYPE=I;g=4;a=1;Gbar=[];b=1;t=4", "--dump"});
  REQUIRE(dumped.code == 0);
  REQUIRE(dumped.out.find("element 0") != std::string::npos);
  REQUIRE(dumped.out.find("verdict: free") != std::string::npos);
}

TEST_CASE("wolf2 prints order and tuple, and compares") {
  RunResult r = run_cli({"wolf2", "3", "20", "--", "-1", "-1", "1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("order: 120") != std::string::npos);
  REQUIRE(r.out.find("TYPE=II;g=120;a=15;Gbar=[1,4,11,14];b=1;t=8") != std::string::npos);

  auto t1 = temp_file("spaceform_w.tbl", "");
  run_cli({"build", "--tuple", "TYPE=II;g=120;a=15;Gbar=[1,4,11,14];b=1;t=8", "--out",
           t1.string()});
  RunResult cmp = run_cli({"wolf2", "--iso", t1.string(), "15", "4", "--", "-1", "-1", "11"});
  REQUIRE(cmp.code == 0);
  REQUIRE(cmp.out.find("ISOMORPHIC") != std::string::npos);
  std::filesystem::remove(t1);
}

TEST_CASE("usage and domain errors use distinct exit codes") {
  RunResult usage = run_cli({"enumerate"});  // missing --max-order
  REQUIRE(usage.code == 2);
  RunResult unknown = run_cli({"frobnicate"});
  REQUIRE(unknown.code == 2);
  RunResult missing = run_cli({"classify", "--in", "/nonexistent/file.tbl"});
  REQUIRE(missing.code == 1);
  REQUIRE(missing.err.find("error:") != std::string::npos);
  RunResult badtuple = run_cli({"build", "--tuple", "TYPE=I;g=6;a=3;Gbar=[1,2];b=1;t=2"});
  REQUIRE(badtuple.code == 1);
  REQUIRE(badtuple.err.find("InvalidTuple") != std::string::npos);
}

TEST_CASE("output is byte-deterministic") {
  RunResult a = run_cli({"enumerate", "--max-order", "48"});
  RunResult b = run_cli({"enumerate", "--max-order", "48"});
  REQUIRE(a.out == b.out);
  RunResult ra = run_cli({"rep", "--tuple", "TYPE=V;g=120;a=1;Gbar=[];b=1"});
  RunResult rb = run_cli({"rep", "--tuple", "TYPE=V;g=120;a=1;Gbar=[];b=1"});
  REQUIRE(ra.out == rb.out);
}
