// CLI end-to-end checks: exit codes, dataset shape, determinism.
// Usage: test_cli <path-to-dpw>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run(const std::string& cmd) { return std::system(cmd.c_str()); }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <dpw>\n";
    return 2;
  }
  const std::string dpw = argv[1];
  const std::string tmp = "cli_test_out";
  run("mkdir -p " + tmp);

  // usage errors exit with 2
  check(WEXITSTATUS(run(dpw + " > /dev/null 2>&1")) == 2, "no subcommand exits 2");
  check(WEXITSTATUS(run(dpw + " region --format bogus > /dev/null 2>&1")) == 2,
        "bad flag value exits 2");

  // computational failure exits with 1 and prints a json record
  check(WEXITSTATUS(run(dpw + " spectrum --a 0.2 --b 0 > /dev/null 2>" + tmp + "/err.json")) == 1,
        "out-of-region spectrum exits 1");
  check(slurp(tmp + "/err.json").find("\"error\"") != std::string::npos,
        "error record is machine readable");

  // region dataset: header + rows + determinism
  check(WEXITSTATUS(run(dpw + " region --n 60 --out " + tmp + "/r1.csv")) == 0, "region runs");
  check(WEXITSTATUS(run(dpw + " region --n 60 --out " + tmp + "/r2.csv")) == 0, "region reruns");
  const std::string r1 = slurp(tmp + "/r1.csv");
  check(r1 == slurp(tmp + "/r2.csv"), "region output byte-identical");
  check(r1.rfind("b,a_minus,a_plus,a_zero_boundary,a0", 0) == 0, "region csv header");

  // period dataset in json
  check(WEXITSTATUS(run(dpw + " period --b -0.1 --n 8 --format json --out " + tmp +
                        "/p.json")) == 0,
        "period json runs");
  const std::string pj = slurp(tmp + "/p.json");
  check(pj.find("\"schema_version\"") != std::string::npos, "json carries schema_version");

  // curve dataset (small) plus plot script emission
  check(WEXITSTATUS(run(dpw + " curve --L 3.14159 --n 16 --out " + tmp +
                        "/c.csv --plot-script")) == 0,
        "curve runs");
  check(slurp(tmp + "/c.csv.gp").find("plot") != std::string::npos, "plot script emitted");

  // certify subset round-trips through json
  check(WEXITSTATUS(run(dpw + " certify --claims C9 --out " + tmp + "/c9.json 2>/dev/null")) == 0,
        "certify C9 runs");
  check(slurp(tmp + "/c9.json").find("out-of-scope") != std::string::npos, "C9 out-of-scope");

  if (failures == 0) std::printf("test_cli: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
