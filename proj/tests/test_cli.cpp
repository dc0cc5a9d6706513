#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const char* cli_path() { return POSBUILD_CLI_PATH; }

int run_cli(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("posbuild_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

std::string slurp(const fs::path& p) {
  std::ostringstream ss;
  ss << std::ifstream(p).rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("solve writes the expected artifacts") {
  const fs::path dir = fresh_dir("solve");
  write_file(dir / "cfg.json",
             R"({"mode":"equilibrium","kappa":1,"lambda":5,"n_terms":12,"gamma":0.8,
                 "output":"out"})");
  CHECK(run_cli("solve " + (dir / "cfg.json").string()) == 0);
  for (const char* name :
       {"strategies.csv", "state_space.csv", "report.json", "coefficients.json"})
    CHECK(fs::exists(dir / "out" / name));

  std::ifstream strat(dir / "out" / "strategies.csv");
  std::string header, first, line, last;
  std::getline(strat, header);
  CHECK(header == "t,a,b,a_closed_form,b_closed_form");
  std::getline(strat, first);
  CHECK(first.substr(0, 6) == "0,0,0,");
  while (std::getline(strat, line))
    if (!line.empty()) last = line;
  CHECK(last.substr(0, 6) == "1,1,1,");
}

TEST_CASE("malformed JSON exits with code 2") {
  const fs::path dir = fresh_dir("badjson");
  write_file(dir / "cfg.json", "{not json");
  CHECK(run_cli("solve " + (dir / "cfg.json").string()) == 2);
}

TEST_CASE("missing required key exits with code 2") {
  const fs::path dir = fresh_dir("badkey");
  write_file(dir / "cfg.json", R"({"mode":"equilibrium","lambda":5})");
  CHECK(run_cli("solve " + (dir / "cfg.json").string()) == 2);
}

TEST_CASE("unknown mode and unknown constraint kind exit with code 2") {
  const fs::path dir = fresh_dir("badmode");
  write_file(dir / "cfg.json", R"({"mode":"frobnicate","kappa":1,"lambda":1})");
  CHECK(run_cli("solve " + (dir / "cfg.json").string()) == 2);
  write_file(dir / "cfg2.json",
             R"({"mode":"equilibrium","kappa":1,"lambda":1,
                 "constraints_a":[{"kind":"mystery"}]})");
  CHECK(run_cli("solve " + (dir / "cfg2.json").string()) == 2);
}

TEST_CASE("--seedless is rejected") {
  const fs::path dir = fresh_dir("seedless");
  write_file(dir / "cfg.json", R"({"mode":"closed_form","kappa":1,"lambda":1})");
  CHECK(run_cli("solve --seedless " + (dir / "cfg.json").string()) == 2);
}

TEST_CASE("diverging run exits with code 3 but still writes artifacts") {
  const fs::path dir = fresh_dir("diverge");
  write_file(dir / "cfg.json",
             R"({"mode":"equilibrium","kappa":25,"lambda":1,"n_terms":35,"gamma":1.0,
                 "output":"out"})");
  CHECK(run_cli("solve " + (dir / "cfg.json").string()) == 3);
  CHECK(fs::exists(dir / "out" / "report.json"));
  CHECK(fs::exists(dir / "out" / "strategies.csv"));
  CHECK(slurp(dir / "out" / "report.json").find("diverged") != std::string::npos);
}

TEST_CASE("--out overrides the configured output directory") {
  const fs::path dir = fresh_dir("outflag");
  write_file(dir / "cfg.json",
             R"({"mode":"closed_form","kappa":25,"lambda":1,"output":"ignored"})");
  const fs::path target = dir / "elsewhere";
  CHECK(run_cli("solve " + (dir / "cfg.json").string() + " --out " + target.string()) ==
        0);
  CHECK(fs::exists(target / "strategies.csv"));
  CHECK(!fs::exists(dir / "ignored"));
}

TEST_CASE("sweep writes one summary row per cell plus per-cell artifacts") {
  const fs::path dir = fresh_dir("sweep");
  write_file(dir / "cfg.json",
             R"({"mode":"equilibrium","kappa":1,"lambda":5,"n_terms":10,
                 "sweep":{"gamma":[0.5,1.0]},"output":"sw"})");
  CHECK(run_cli("sweep " + (dir / "cfg.json").string()) == 0);
  const std::string summary = slurp(dir / "sw" / "summary.csv");
  CHECK(summary.find("kappa,lambda,gamma,n_terms,status,iterations") == 0);
  size_t rows = 0;
  for (char c : summary)
    if (c == '\n') ++rows;
  CHECK(rows == 3);  // header + 2 cells
  CHECK(fs::exists(dir / "sw" / "cell_k1_l5_g0.5_N10" / "report.json"));
}

TEST_CASE("empty sweep axis yields a header-only summary") {
  const fs::path dir = fresh_dir("emptysweep");
  write_file(dir / "cfg.json",
             R"({"mode":"equilibrium","kappa":1,"lambda":5,
                 "sweep":{"gamma":[]},"output":"sw"})");
  CHECK(run_cli("sweep " + (dir / "cfg.json").string()) == 0);
  const std::string summary = slurp(dir / "sw" / "summary.csv");
  CHECK(summary.find("kappa,") == 0);
  CHECK(summary.find('\n') == summary.size() - 1);
}
