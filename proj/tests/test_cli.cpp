// End-to-end tests of the command-line binary. The binary path arrives as the
// first test argument (wired through CTest).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gen emits the expected coefficient rows") {
  const RunResult r = run("gen --a 1 --b -1 --n 4 --method recurrence");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n,k,coeff"));
  CHECK(contains(r.out, "4,0,-12"));
  CHECK(contains(r.out, "4,2,12"));
  CHECK(contains(r.out, "4,4,1"));
}

TEST_CASE("gen with a = b = 0 yields pure powers") {
  const RunResult r = run("gen --a 0 --b 0 --n 3");
  CHECK(r.exit_code == 0);
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      const std::string row =
          std::to_string(n) + "," + std::to_string(k) + "," + (k == n ? "1" : "0") + "\n";
      CHECK(contains(r.out, row));
    }
}

TEST_CASE("gen --check passes on the three-route comparison") {
  const RunResult r = run("gen --a 1 --b -1 --n 60 --check --method explicit");
  CHECK(r.exit_code == 0);
}

TEST_CASE("gen accepts exact rationals and round-trips them") {
  const RunResult r = run("gen --a 7/3 --b -5/2 --n 2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"a\": \"7/3\""));
  CHECK(contains(r.out, "\"b\": \"-5/2\""));
  CHECK(contains(r.out, "\"14/3\""));  // P_2 constant term 2a
}

TEST_CASE("output is deterministic") {
  const RunResult r1 = run("roots --a 1 --b -1 --n 12 --format json");
  const RunResult r2 = run("roots --a 1 --b -1 --n 12 --format json");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(contains(r1.out, "IMAGINARY"));
}

TEST_CASE("roots --certify is clean under the hypothesis") {
  const RunResult r = run("roots --a 1 --b -1 --certify --max-n 15");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n,off_axis,max_residual,max_reduced_imag,solver_ok"));
}

TEST_CASE("roots --certify outside the hypothesis reports instead of failing") {
  const RunResult r = run("roots --a 1 --b 1 --certify --max-n 8 --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"hypothesis_met\": false"));
}

TEST_CASE("saddle and asym tables") {
  const RunResult r = run("saddle --m 100 --s 1.0 --a-real 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "closed_form_dist"));

  const RunResult g = run("saddle --m 100 --a-real 1 --grid 5 --axis imag");
  CHECK(g.exit_code == 0);

  const RunResult a = run("asym --m 50 --m 100 --s 1.0 --a-real 0 --exact");
  CHECK(a.exit_code == 0);
  CHECK(contains(a.out, "log_mag"));
  CHECK(contains(a.out, "rel_error"));
}

TEST_CASE("oracle agrees with the exact value") {
  const RunResult r = run("oracle --m 10 --s 1.0 --a 1 --b -1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "rel_diff"));
}

TEST_CASE("tree --verify") {
  const RunResult r = run("tree --a 1 --b -1 --n 6 --verify");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "4,0,-12"));
  const RunResult bad = run("tree --a 1/2 --b -1 --n 4");
  CHECK(bad.exit_code == 4);
}

TEST_CASE("bad input exits with code 4") {
  CHECK(run("gen --a 1 --b").exit_code == 4);
  CHECK(run("gen --a 1/0 --b -1 --n 3").exit_code == 4);
  CHECK(run("nonsense").exit_code == 4);
  CHECK(run("gen --a 1 --b -1 --n 3 --method sideways").exit_code == 4);
}

TEST_CASE("verify --quick subset passes") {
  const RunResult r = run("verify --quick --max-n 10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "criterion,name,pass,hypothesis_met,detail"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  int kept = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (!arg.empty() && arg[0] != '-' && g_binary.empty())
      g_binary = arg;
    else
      argv[kept++] = argv[i];
  }
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-binary> [doctest options]\n");
    return 1;
  }
  ctx.applyCommandLine(kept, argv);
  return ctx.run();
}
