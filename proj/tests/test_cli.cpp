#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ORDPOLY_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("ordpoly_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("normalize command") {
  RunResult r = run_cli("normalize \"p*q\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "q*p - i*hbar\n");

  r = run_cli("normalize \"t[1,1;0]\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "q*p - (1/2)*i*hbar\n");

  r = run_cli("normalize \"p*q*\"");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("position") != std::string::npos);
}

TEST_CASE("bracket command") {
  RunResult r = run_cli("bracket q p");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "i*hbar\n");
  r = run_cli("bracket --anti q p");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2*q*p - i*hbar\n");
}

TEST_CASE("verify usage errors") {
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("verify --suite bogus").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("table output matches the golden files") {
  fs::path dir = fresh_dir("table");
  RunResult r = run_cli("table --n-max 4 --out " + dir.string());
  CHECK(r.exit_code == 0);
  const fs::path golden = fs::path(ORDPOLY_GOLDEN_DIR);
  CHECK(slurp(dir / "cartan_table.txt") == slurp(golden / "cartan_table.txt"));
  CHECK(slurp(dir / "cartan_table.json") == slurp(golden / "cartan_table.json"));
}

TEST_CASE("verify writes a deterministic report body") {
  fs::path dir1 = fresh_dir("rep1"), dir2 = fresh_dir("rep2");
  RunResult r1 = run_cli("verify --suite su11 --out " + dir1.string());
  RunResult r2 = run_cli("verify --suite su11 --out " + dir2.string());
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  auto body = [](const fs::path& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(slurp(p / "report.json"));
    j.erase("timings");
    j.erase("generated_at");
    return j.dump();
  };
  CHECK(body(dir1) == body(dir2));

  nlohmann::ordered_json j = nlohmann::ordered_json::parse(slurp(dir1 / "report.json"));
  CHECK(j["schema_version"] == 1);
  CHECK(j["summary"]["all_passed"] == true);
  CHECK(j.contains("timings"));
  CHECK(j.contains("generated_at"));
}

TEST_CASE("config file settings with command-line override") {
  fs::path dir = fresh_dir("cfg");
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "# comment line\n"
        << "n_max = 2\n"
        << "out = " << (dir / "from_file").string() << "\n";
  }
  RunResult r = run_cli("table --config " + (dir / "run.cfg").string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "from_file" / "cartan_table.json"));
  // flag overrides the file
  RunResult r2 = run_cli("table --config " + (dir / "run.cfg").string() + " --out " +
                         (dir / "override").string());
  CHECK(r2.exit_code == 0);
  CHECK(fs::exists(dir / "override" / "cartan_table.json"));

  RunResult bad = run_cli("table --n-max -3");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("schrodinger command writes per-case csv files") {
  fs::path dir = fresh_dir("schr");
  RunResult r = run_cli("schrodinger --n-max 1 --v 0,1 --out " + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "schrodinger_n0_v0.000000.csv"));
  CHECK(fs::exists(dir / "schrodinger_n1_v1.000000.csv"));
  std::string csv = slurp(dir / "schrodinger_n0_v0.000000.csv");
  CHECK(csv.rfind("y,potential,psi,residual", 0) == 0);
}

TEST_CASE("orthogonality command writes grids and the resolution line") {
  fs::path dir = fresh_dir("orth");
  RunResult r =
      run_cli("orthogonality --n-max 2 --s -3 --phi 1.5707963267948966 --hbar 2 --out " +
              dir.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n=0 integral / bare norm") != std::string::npos);
  CHECK(fs::exists(dir / "discrete_s_-3.csv"));
  CHECK(fs::exists(dir / "orthogonality_summary.json"));
  nlohmann::ordered_json j =
      nlohmann::ordered_json::parse(slurp(dir / "orthogonality_summary.json"));
  CHECK(j["normalization"]["constant"] == 2.0);
  CHECK(j["all_ok"] == true);
}
