#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef DELTARING_CLI_PATH
#define DELTARING_CLI_PATH "deltaring"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string out_file = "cli_test.out";
  std::string cmd = std::string(DELTARING_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = status == -1 ? -1 : WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(out_file.c_str());
  return r;
}

}  // namespace

TEST_CASE("exit codes follow the verdict") {
  CHECK(run("delta -p 2 \"Z24\"").exit_code == 0);
  CHECK(run("delta -p 2 \"Z16\"").exit_code == 1);
  CHECK(run("delta -p 3 \"GF(4)\"").exit_code == 0);
  CHECK(run("delta -p 2 \"Z8[s]/(s^2-1)\"").exit_code == 1);
  auto r = run("delta -p 2 \"Z8[s]/(s^2-1)\"");
  CHECK(r.output.find("witness:") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("delta -p 2 \"Z[x]\"").exit_code == 2);
  CHECK(run("delta -p 2 \"Z4[x]/(2*x^2)\"").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("delta \"Z24\"").exit_code == 2);  // missing -p
  CHECK(run("dedekind 7").exit_code == 2);     // out of desk scale
}

TEST_CASE("cap exhaustion exits 3") {
  CHECK(run("--cap 100 delta -p 2 \"Z4[x,y]/(x^2-1,y^2-1)\"").exit_code == 3);
  CHECK(run("--cap 100 units \"Z24[s]/(s^2-1)\"").exit_code == 3);
}

TEST_CASE("spec'd command lines") {
  auto lat = run("lattice \"F2[x,y]/(x^2,y^2)\"");
  CHECK(lat.exit_code == 0);
  CHECK(lat.output.substr(0, 2) == "7\n");

  auto ded = run("dedekind 5");
  CHECK(ded.exit_code == 0);
  CHECK(ded.output.substr(0, 5) == "7581\n");

  auto units = run("units \"Z24\"");
  CHECK(units.exit_code == 0);
  CHECK(units.output.find("units: 8") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  auto a = run("units \"Z24\" -p 2 -p 3");
  auto b = run("units \"Z24\" -p 2 -p 3");
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"delta\":{\"2\":true,\"3\":false}") != std::string::npos);

  auto c = run("family \"z_family(4, 2)\"");
  auto d = run("family \"z_family(4, 2)\"");
  CHECK(c.exit_code == 0);
  CHECK(c.output == d.output);

  // --timings breaks byte identity by design, so it is off by default
  CHECK(a.output.find("duration") == std::string::npos);
}

TEST_CASE("dot export on request") {
  std::string dot_file = "cli_test_lattice.dot";
  auto r = run("lattice \"F2[x,y]/(x^2,y^2)\" --dot " + dot_file);
  CHECK(r.exit_code == 0);
  std::ifstream in(dot_file);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  std::string dot = buf.str();
  std::remove(dot_file.c_str());
  CHECK(dot.find("digraph ideal_lattice") == 0);
  CHECK(dot.find("(x, y)") != std::string::npos);  // labels follow the declared names
  CHECK(dot.back() == '\n');
}

TEST_CASE("quiver subcommand") {
  std::string qfile = "cli_test_quiver.txt";
  {
    std::ofstream out(qfile);
    out << "5; 0->1 2->1 2->3 4->3\n";
  }
  auto ok = run("quiver " + qfile + " --field 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("paths: 9") != std::string::npos);
  CHECK(ok.output.find("structural delta_2: true") != std::string::npos);

  auto bad = run("quiver " + qfile + " --field 3");
  CHECK(bad.exit_code == 1);

  {
    std::ofstream out(qfile);
    out << "2; 0->1 1->0\n";
  }
  auto cyc = run("quiver " + qfile + " --field 2");
  CHECK(cyc.exit_code == 2);
  CHECK(cyc.output.find("cycle") != std::string::npos);
  std::remove(qfile.c_str());
}

TEST_CASE("family subcommand") {
  CHECK(run("family \"group_algebra(6, [2])\"").exit_code == 0);
  CHECK(run("family \"group_algebra(24, [2])\"").exit_code == 1);
  CHECK(run("family \"group_algebra(2, [7])\" -p 7").exit_code == 0);
  auto big = run("family \"group_algebra(24, [2, 2, 2])\"");
  CHECK(big.output.find("unverified") != std::string::npos);
}

TEST_CASE("environment cap override") {
  auto r = run("--seed 1 delta -p 2 \"Z4[x,y]/(x^2-1,y^2-1)\"");
  CHECK(r.exit_code == 1);  // 256 elements fit the default cap
  std::string cmd = std::string("DELTARING_CAP=100 ") + DELTARING_CLI_PATH +
                    " delta -p 2 \"Z4[x,y]/(x^2-1,y^2-1)\" > cli_env.out 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
  std::remove("cli_env.out");
}
