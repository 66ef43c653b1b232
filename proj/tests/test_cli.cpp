#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LAVER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(LAVER_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("table output and conventions") {
  RunResult r = run("table --n 3 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 7) == "a,b,ab\n");
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 65);  // header + all 64 products of A_3
  CHECK(r.out.find("\n1,3,6\n") != std::string::npos);

  // Byte-identical across runs.
  CHECK(run("table --n 3 --format csv").out == r.out);

  // One-based convention replaces 0 by 2^n.
  RunResult one = run("table --n 1 --format csv --convention one");
  CHECK(one.out.find("2,2,2") != std::string::npos);
  CHECK(one.out.find("0") == std::string::npos);

  RunResult j = run("table --n 2 --format json");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["n"] == 2);
  CHECK(parsed["products"][1][1] == 2);  // 1 * 1 = 2 in A_2
  CHECK(parsed["products"][1][2] == 0);  // row 1 has period 2
  CHECK(parsed["products"][0][3] == 3);
}

TEST_CASE("word evaluation commands") {
  CHECK(run("eval --a 1*1 --n 2").out == "2\n");
  CHECK(run("eval --a 1*1 --n 1 --convention one").out == "2\n");
  RunResult p = run("profile --a 1*1 --cap 3 --format csv");
  CHECK(p.out == "n,value\n0,0\n1,0\n2,2\n3,2\n");
  CHECK(run("signature --a 1*1 --cap 4").out == "known 1\n");
  CHECK(run("normalize --a \"(1*1)o1\"").out == "(1*1) o 1\n");
  CHECK(run("period --n 3 --format csv").out.substr(0, 13) == "a,period\n0,8\n");
}

TEST_CASE("probes and exit codes") {
  RunResult r = run("probe --k 4 --cap 8");
  CHECK(r.out == "known 5\n");
  CHECK(r.code == 0);
  RunResult u = run("probe --k 16 --cap 12");
  CHECK(u.out == "undecided 12\n");
  CHECK(u.code == 2);
  CHECK(run("hprobe --k 3 --cap 12").out == "known 4\n");
  CHECK(run("hprobe --k 4 --cap 12").code == 2);
  auto j = nlohmann::json::parse(run("probe --k 1 --cap 8 --format json").out);
  CHECK(j["verdict"] == "known");
  CHECK(j["level"] == 2);
}

TEST_CASE("comparison") {
  RunResult r = run("compare --a 1 --b 1*1");
  CHECK(r.out == "less\n");
  CHECK(r.code == 0);
  CHECK(run("compare --a \"1*(1*1)\" --b \"(1*1)*(1*1)\"").out == "equiv\n");
  CHECK(run("compare --a 1*1 --b 1").out == "greater\n");
  RunResult starved = run("compare --a \"(1*1)*1\" --b \"1*(1*1)\" --fuel 5");
  CHECK(starved.out == "out-of-fuel\n");
  CHECK(starved.code == 2);
}

TEST_CASE("law checking") {
  RunResult r = run("check-laws --n 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("LD pass") != std::string::npos);
  CHECK(r.out.find("Sigma pass") != std::string::npos);
  CHECK(r.out.find("Hom pass") != std::string::npos);
  CHECK(r.out.find("Periods pass") != std::string::npos);
  // Sampled run is deterministic under a fixed seed.
  std::string s1 = run("check-laws --n 9 --fuel 2000 --seed 7").out;
  CHECK(s1 == run("check-laws --n 9 --fuel 2000 --seed 7").out);
}

TEST_CASE("embedding commands") {
  RunResult ok = run("embed-check --file " + data("sample.embedalg"));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("refuted") == std::string::npos);
  RunResult bad = run("embed-check --file " + data("successor.embedalg"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("critical-point refuted") != std::string::npos);
  CHECK(bad.out.find("(f, f, 0)") != std::string::npos);

  RunResult seq = run("embed-critseq --file " + data("sample.embedalg") +
                      " --k 3");
  CHECK(seq.out == "0 1 3\n");
  CHECK(seq.code == 0);
  CHECK(run("embed-critseq --file " + data("sample.embedalg") +
            " --a k --k 4")
            .out == "1 3 7 15\n");

  RunResult ts = run("embed-two-sorted --file " + data("sample.embedalg") +
                     " --k 3 --fuel 20000");
  CHECK(ts.code == 0);
  CHECK(ts.out.find("refuted") == std::string::npos);
  CHECK(ts.out.find("kappa-sequence verified") != std::string::npos);
}

TEST_CASE("usage and format errors exit with 3") {
  CHECK(run("frobnicate").code == 3);
  CHECK(run("table --n notanumber").code == 3);
  CHECK(run("eval --a \"1*((\" --n 2").code == 3);
  CHECK(run("embed-check --file /nonexistent.embedalg").code == 3);
  CHECK(run("probe --k 0 --cap 4").code == 3);
  CHECK(run("table --format yaml --n 2").code == 3);
}
