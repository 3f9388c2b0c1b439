// End-to-end checks of the command-line tool: subcommands, formats, exit
// codes and byte-level determinism.  The binary path comes from CMake.

#include <sys/wait.h>

#include <cstdio>
#include <cstring>
#include <string>

#ifndef ZLTV_CLI_PATH
#error "ZLTV_CLI_PATH must be defined"
#endif

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string("'") + ZLTV_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
  int status = pclose(f);
  return {WEXITSTATUS(status), out};
}

int failures = 0;

void expect(bool cond, const char* what) {
  if (!cond) {
    std::fprintf(stderr, "FAILED: %s\n", what);
    ++failures;
  }
}

}  // namespace

int main() {
  auto r = run("enumerate --degree 5 --passport 1,1,2");
  expect(r.code == 0, "enumerate exits 0");
  expect(r.out.find("5 classes") != std::string::npos, "enumerate lists 5 classes");

  r = run("enumerate --degree 5 --passport 1,1,3");
  expect(r.code == 2, "invalid passport exits 2");

  r = run("enumerate --degree 7 --passport 2,2,2 --group psl27");
  expect(r.code == 0, "group filter works");
  expect(r.out.find("6 classes") != std::string::npos, "six order-168 classes");

  r = run("enumerate --degree 6 --passport 2,2,1 --min-aut 2");
  expect(r.out.find("3 classes") != std::string::npos, "three symmetric classes");

  r = run("atlas --degree 6 --passport 2,2,1 --group symmetric");
  expect(r.code == 0, "atlas exits 0");
  expect(r.out.find("F=12 E=18 V=8 chi=2 sphere") != std::string::npos,
         "degree-6 summary line");

  r = run("atlas --degree 7 --passport 2,2,2 --group alternating");
  expect(r.out.find("F=7 E=11 V=5 chi=1 projective_plane") != std::string::npos,
         "degree-7 component summary");

  r = run("atlas --degree 5 --passport 1,1,2 --format dot");
  expect(r.code == 0, "dot export exits 0");
  {
    size_t nodes = 0, links = 0, pos = 0;
    while ((pos = r.out.find("[label=\"v", pos)) != std::string::npos) {
      ++nodes;
      ++pos;
    }
    pos = 0;
    while ((pos = r.out.find(" -- ", pos)) != std::string::npos) {
      ++links;
      ++pos;
    }
    expect(nodes == 4 && links == 8, "dot graph has 4 vertices and 8 edges");
  }

  r = run("borders --degree 5 --passport 1,1,2 --format json");
  expect(r.code == 0 && r.out.find("\"walls\"") != std::string::npos, "borders json");

  r = run("analytic intro");
  expect(r.code == 0, "analytic intro exits 0");
  expect(r.out.find("FAIL") == std::string::npos, "intro checks all pass");

  r = run("analytic deg5 --b 0.3+0.2i --format json");
  expect(r.code == 0 && r.out.find("\"shabat_parameters\"") != std::string::npos,
         "deg5 analytic json");

  r = run("analytic deg5 --b 0i");
  expect(r.code == 1, "domain error exits 1");

  r = run("analytic deg6 --z 1.73");
  expect(r.code == 0 && r.out.find("distinct critical values") != std::string::npos,
         "deg6 analytic text");

  r = run("verify --only analytic");
  expect(r.code == 0, "verify --only analytic exits 0");
  expect(r.out.find("FAIL") == std::string::npos, "analytic criteria pass");

  // byte-identical repeated runs
  auto a1 = run("atlas --degree 5 --passport 1,1,2 --format json");
  auto a2 = run("atlas --degree 5 --passport 1,1,2 --format json");
  expect(!a1.out.empty() && a1.out == a2.out, "atlas json runs are byte-identical");
  auto v1 = run("verify --only borders");
  auto v2 = run("verify --only borders");
  expect(!v1.out.empty() && v1.out == v2.out, "verify runs are byte-identical");

  if (failures == 0) std::printf("cli tests passed\n");
  return failures == 0 ? 0 : 1;
}
