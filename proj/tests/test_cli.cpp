#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "qphase/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

const char* cli_path() {
  const char* p = std::getenv("QPHASE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "QPHASE_CLI must point at the built binary");
  return p;
}

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() /
             ("qphase_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = work_dir() / ("cmd_out_" + std::to_string(counter++));
  const std::string cmd = std::string("\"") + cli_path() + "\" " + args +
                          " > \"" + out.string() + "\" 2>&1";
  const int rc = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream is(out);
  r.output.assign(std::istreambuf_iterator<char>(is),
                  std::istreambuf_iterator<char>());
  return r;
}

std::string slurp(const fs::path& p) { return qphase::read_file(p.string()); }

}  // namespace

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("wigner --help").exit_code == 0);
  CHECK(run_cli("bell --help").exit_code == 0);
}

TEST_CASE("configuration mistakes exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("wigner --q-a 2").exit_code == 2);
  CHECK(run_cli("wigner --q-a 0").exit_code == 2);
  CHECK(run_cli("wigner --no-such-flag").exit_code == 2);
  CHECK(run_cli("wigner --window x:1:0:9").exit_code == 2);
  CHECK(run_cli("wigner --window bogus").exit_code == 2);
  CHECK(run_cli("wigner --amp-a 0.9 --amp-b 0.1").exit_code == 2);
  CHECK(run_cli("bell --variant sigma+").exit_code == 2);
  CHECK(run_cli("bell --free xA,xA").exit_code == 2);
  CHECK(run_cli("verify --level medium").exit_code == 2);
}

TEST_CASE("derived-constant report") {
  const auto r = run_cli("params --q-a 0.001");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("h_a = 3.7169221888498383") != std::string::npos);
  CHECK(r.output.find("lambda = 0.5") != std::string::npos);
}

TEST_CASE("wavefunction tabulation") {
  const fs::path prefix = work_dir() / "psi_run";
  const auto r = run_cli("psi --n 2 --q-a 0.5 --window x:-2:2:41 --out \"" +
                         prefix.string() + "\"");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(prefix.string() + ".csv");
  CHECK(csv.rfind("# fixed: n=2,q=0.5\nx,re,im,density\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 41);
}

TEST_CASE("superposition grid emission in both formats") {
  const fs::path prefix = work_dir() / "wig_run";
  const std::string args =
      "wigner --n 1 --m 2 --q-a 0.5 --window x:-1:1:11 --window p:-4:2:9 "
      "--format both --out \"" +
      prefix.string() + "\"";
  const auto r = run_cli(args);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("peak |W| at (x=") != std::string::npos);
  const std::string csv = slurp(prefix.string() + ".csv");
  CHECK(csv.rfind("# fixed:\nx,p,W\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 11 * 9);
  const std::string pgm = slurp(prefix.string() + ".pgm");
  CHECK(pgm.rfind("P5\n11 9\n65535\n", 0) == 0);
  CHECK(pgm.size() == std::string("P5\n11 9\n65535\n").size() + 2 * 11 * 9);
  const std::string side = slurp(prefix.string() + ".pgm.minmax");
  CHECK(side.find("rows 9") != std::string::npos);
  CHECK(side.find("cols 11") != std::string::npos);
}

TEST_CASE("identical requests give identical bytes across worker counts") {
  const fs::path p1 = work_dir() / "det_a";
  const fs::path p2 = work_dir() / "det_b";
  const fs::path p3 = work_dir() / "det_c";
  const std::string base =
      "bell --variant psi- --n 2 --m 6 --q-a 0.001 --window xA:-1.2:1.2:19 "
      "--window pA:-26:3:17 --format both --out \"";
  CHECK(run_cli(base + p1.string() + "\" --threads 1").exit_code == 0);
  CHECK(run_cli(base + p2.string() + "\" --threads 4").exit_code == 0);
  CHECK(run_cli(base + p3.string() + "\" --threads 1").exit_code == 0);
  for (const char* suffix : {".csv", ".pgm", ".pgm.minmax"}) {
    const std::string a = slurp(p1.string() + suffix);
    CHECK(a == slurp(p2.string() + suffix));
    CHECK(a == slurp(p3.string() + suffix));
    CHECK(!a.empty());
  }
}

TEST_CASE("term decomposition file accompanies the slice") {
  const fs::path prefix = work_dir() / "bell_dec";
  const auto r = run_cli(
      "bell --variant phi+ --n 0 --m 1 --q-a 0.5 --window xA:-1:1:5 "
      "--window pA:-2:1:4 --fix xB=0.25 --fix pB=-0.5 --decompose --out \"" +
      prefix.string() + "\"");
  CHECK(r.exit_code == 0);
  const std::string terms = slurp(prefix.string() + "_terms.csv");
  CHECK(terms.rfind("# fixed: xB=0.25,pB=-0.5\nxA,pA,W,W1,W2,W3\n", 0) == 0);
  std::istringstream lines(terms);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    double xA, pA, w, w1, w2, w3;
    char sep;
    std::istringstream row(line);
    row >> xA >> sep >> pA >> sep >> w >> sep >> w1 >> sep >> w2 >> sep >> w3;
    CHECK(std::abs(w - (w1 + w2 + w3)) <= 1e-12);
  }
  CHECK(rows == 5 * 4);
}

TEST_CASE("flags override the configuration file") {
  const fs::path cfg = work_dir() / "cfg.ini";
  {
    std::ofstream os(cfg);
    os << "[params]\nq-a=0.25\n";
  }
  const auto from_file =
      run_cli("--config \"" + cfg.string() + "\" params");
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output.find("q_a = 0.25") != std::string::npos);
  const auto overridden =
      run_cli("--config \"" + cfg.string() + "\" params --q-a 0.5");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.output.find("q_a = 0.5") != std::string::npos);
}
