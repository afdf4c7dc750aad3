// End-to-end runs of the command-line tool; the binary path arrives in the
// NPICK_CLI environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::string cli_path() {
  const char* path = std::getenv("NPICK_CLI");
  REQUIRE(path != nullptr);
  return path;
}

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  fs::path out = fs::temp_directory_path() / "npick_cli_stdout.txt";
  std::string command = cli_path() + " " + args + " > " + out.string() + " 2>/dev/null";
  int raw = std::system(command.c_str());
  std::ifstream in(out);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return {WEXITSTATUS(raw), buffer.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
  fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("solve exits 0 with a verdict") {
  fs::path problem = write_temp(
      "npick_cli_problem.json",
      R"({"nodes": [[0,0],[0.5,0]], "targets": [[0,0],[0.25,0]]})");
  RunResult result = run_cli("solve " + problem.string());
  CHECK(result.exit_code == 0);
  Json report = Json::parse(result.stdout_text);
  CHECK(report.at("solvable") == "yes");
  CHECK(report.at("scaled") == true);
  CHECK(report.contains("invariants"));
  CHECK(report.at("invariants").at("determinant_identity_rel").get<double>() < 1e-9);
}

TEST_CASE("solve reports infeasible problems with exit 0") {
  fs::path problem = write_temp(
      "npick_cli_infeasible.json",
      R"({"nodes": [[0,0],[0.1,0]], "targets": [[0,0],[0.9,0]]})");
  RunResult result = run_cli("solve " + problem.string());
  CHECK(result.exit_code == 0);
  Json report = Json::parse(result.stdout_text);
  CHECK(report.at("solvable") == "no");
  CHECK_FALSE(report.contains("invariants"));
}

TEST_CASE("invalid input exits 2") {
  fs::path garbage = write_temp("npick_cli_garbage.json", "{nope");
  CHECK(run_cli("solve " + garbage.string()).exit_code == 2);
  CHECK(run_cli("solve /nonexistent/file.json").exit_code == 2);
  CHECK(run_cli("classify --class balpha").exit_code == 2);
}

TEST_CASE("extremal dumps are deterministic and refuse infeasible problems") {
  fs::path problem = write_temp(
      "npick_cli_extremal.json",
      R"({"nodes": [[0,0],[0.5,0],[-0.2,0.3]], "targets": [[0.1,0],[0.3,0.1],[0,0.2]]})");
  fs::path dir1 = fs::temp_directory_path() / "npick_cli_out1";
  fs::path dir2 = fs::temp_directory_path() / "npick_cli_out2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);

  RunResult first = run_cli("extremal " + problem.string() +
                            " --gamma-count 8 --z-samples 12 --seed 5 --out " +
                            dir1.string());
  CHECK(first.exit_code == 0);
  RunResult second = run_cli("extremal " + problem.string() +
                             " --gamma-count 8 --z-samples 12 --seed 5 --out " +
                             dir2.string());
  CHECK(second.exit_code == 0);

  for (const char* name : {"values.csv", "boundary.csv", "vertevorrat.csv"}) {
    std::ifstream a(dir1 / name), b(dir2 / name);
    std::ostringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK_FALSE(sa.str().empty());
  }

  fs::path infeasible = write_temp(
      "npick_cli_extremal_bad.json",
      R"({"nodes": [[0,0],[0.1,0]], "targets": [[0,0],[0.9,0]]})");
  CHECK(run_cli("extremal " + infeasible.string()).exit_code == 3);
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("classify by generator") {
  RunResult result = run_cli(
      "classify --generator exponential --count 12 --per-annulus 1 "
      "--angle-rule equidistributed --class balpha --alpha 0.5");
  CHECK(result.exit_code == 0);
  Json report = Json::parse(result.stdout_text);
  CHECK(report.at("verdict") == "finite");

  RunResult counts = run_cli(
      "classify --generator exponential --count 12 --per-annulus 1 "
      "--angle-rule equidistributed --class exponential");
  CHECK(counts.exit_code == 0);
  CHECK(Json::parse(counts.stdout_text).at("bound") == 1);

  CHECK(run_cli("classify --generator power --count 10 --class nonsense")
            .exit_code == 2);
}

TEST_CASE("generate then classify round trip") {
  fs::path zeros = fs::temp_directory_path() / "npick_cli_zeros.json";
  RunResult gen = run_cli(
      "generate zeros --generator power --exponent 3 --count 200 "
      "--angle-rule random --seed 11 --out " + zeros.string());
  CHECK(gen.exit_code == 0);
  RunResult classified =
      run_cli("classify --zeros " + zeros.string() + " --class balpha --alpha 0.5");
  CHECK(classified.exit_code == 0);
  CHECK(Json::parse(classified.stdout_text).at("verdict") == "finite");
}

TEST_CASE("generate scaled problems") {
  RunResult gen = run_cli(
      "generate problem --generator power --exponent 2 --count 5 "
      "--angle-rule equidistributed --scale 0.4 --seed 2");
  CHECK(gen.exit_code == 0);
  Json problem = Json::parse(gen.stdout_text);
  CHECK(problem.at("nodes").size() == 5);
  CHECK(problem.at("targets").size() == 5);
  CHECK(problem.at("scale") == 0.4);
}

TEST_CASE("verify sets exit codes and names the failing anchor") {
  RunResult ok = run_cli("verify --recipe thm2-averaging --seed 3 --budget 0");
  CHECK(ok.exit_code == 0);
  Json report = Json::parse(ok.stdout_text);
  CHECK(report.at("pass") == true);

  CHECK(run_cli("verify --recipe nonsense").exit_code == 2);
}

TEST_CASE("config file supplies defaults, flags win") {
  fs::path config = write_temp("npick_cli_config.json", R"({"seed": 5})");
  fs::path problem = write_temp(
      "npick_cli_config_problem.json",
      R"({"nodes": [[0,0],[0.5,0]], "targets": [[0.1,0],[0.3,0]]})");
  fs::path dir_config = fs::temp_directory_path() / "npick_cli_out_cfg";
  fs::path dir_flag = fs::temp_directory_path() / "npick_cli_out_flag";
  fs::remove_all(dir_config);
  fs::remove_all(dir_flag);

  RunResult with_config =
      run_cli("extremal " + problem.string() + " --gamma-count 8 --z-samples 6 " +
              "--config " + config.string() + " --out " + dir_config.string());
  CHECK(with_config.exit_code == 0);
  RunResult with_flag =
      run_cli("extremal " + problem.string() +
              " --gamma-count 8 --z-samples 6 --seed 5 --out " + dir_flag.string());
  CHECK(with_flag.exit_code == 0);

  std::ifstream a(dir_config / "values.csv"), b(dir_flag / "values.csv");
  std::ostringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  fs::remove_all(dir_config);
  fs::remove_all(dir_flag);
}
