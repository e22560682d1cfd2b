#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "support/subprocess.hpp"

using testutil::run_command;

namespace {

const std::string kCli = OBJSIZE_CLI_PATH;

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("size prints the full sizing pipeline") {
  const auto result =
      run_command(kCli + " size --rho 0.01 --n 2 --mss 1460 --model tdm");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("theta = 1470\n") != std::string::npos);
  CHECK(result.output.find("m = 297\n") != std::string::npos);
}

TEST_CASE("users prints raw and integerized counts") {
  const auto result = run_command(kCli + " users --rho 0.05 --n 9");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "m_raw = 5.27778, m = 6\n");
}

TEST_CASE("wait subcommands print plain numbers") {
  CHECK(run_command(kCli + " wait h2 --lambda 0.01 --n 2").output == "150\n");
  CHECK(run_command(kCli + " wait tdm --rho 0.01 --m 297").output == "150\n");
  CHECK(run_command(kCli + " wait fdm --rho 0.5 --m 2").output == "1\n");
  CHECK(run_command(kCli + " wait md1 --lambda 0.9 --mu 1").output == "4.5\n");
  CHECK(run_command(kCli + " wait pk --lambda 0.5 --mean 1 --m2 2").output ==
        "1\n");
  CHECK(run_command(kCli +
                    " wait mg1v --lambda 0.5 --mean 1 --m2 2 "
                    "--vac-mean 1 --vac-m2 1")
            .output == "1.5\n");
}

TEST_CASE("rho and lambda are synonyms; disagreement is a usage error") {
  CHECK(run_command(kCli + " users --lambda 0.05 --n 9").output ==
        "m_raw = 5.27778, m = 6\n");
  const auto conflict =
      run_command(kCli + " users --rho 0.05 --lambda 0.1 --n 9 2>/dev/null");
  CHECK(conflict.exit_code == 2);
}

TEST_CASE("exit codes: usage, domain, infeasibility, io") {
  CHECK(run_command(kCli + " nonsense 2>/dev/null").exit_code == 2);
  CHECK(run_command(kCli + " 2>/dev/null").exit_code == 2);
  CHECK(run_command(kCli + " --help >/dev/null").exit_code == 0);
  CHECK(run_command(kCli + " wait tdm --rho 1.2 --m 2 2>/dev/null").exit_code ==
        3);

  const auto infeasible = run_command(
      kCli + " size --rho 0.6 --n 2 --model h2 2>&1 >/dev/null");
  CHECK(infeasible.exit_code == 3);
  // The message names the violated feasibility bound.
  CHECK(infeasible.output.find("1 + (N+1)^2/(2N(N-1))") != std::string::npos);

  CHECK(run_command(kCli +
                    " sweep --preset paper --out /nonexistent-dir/t.csv "
                    "2>/dev/null")
            .exit_code == 4);
}

TEST_CASE("sweep --preset paper excludes custom grid flags") {
  CHECK(run_command(kCli + " sweep --preset paper --rho 0.5 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("sweep accepts a custom multi-load grid") {
  const auto result = run_command(
      kCli + " sweep --rho 0.2 0.3 --n-min 2 --n-max 3 --mss 1000"
             " --model tdm");
  CHECK(result.exit_code == 0);
  // 2 loads x 2 N x 1 mss x 1 model plus one mean row per load.
  CHECK(result.output.find("0.2,2,1000,tdm,") != std::string::npos);
  CHECK(result.output.find("0.3,3,1000,tdm,") != std::string::npos);
  CHECK(result.output.find("0.3,mean,1000,tdm,") != std::string::npos);
}

TEST_CASE("sweep writes byte-identical files across runs") {
  const std::string path_a = tmp_path("objsize_sweep_a.csv");
  const std::string path_b = tmp_path("objsize_sweep_b.csv");
  CHECK(run_command(kCli + " sweep --preset paper --out " + path_a)
            .exit_code == 0);
  CHECK(run_command(kCli + " sweep --preset paper --out " + path_b)
            .exit_code == 0);
  const std::string a = slurp(path_a);
  CHECK(a == slurp(path_b));
  CHECK(a.rfind("rho,N,mss,model,m_raw,m,n,theta_raw,theta\n", 0) == 0);
  CHECK(a.find("0.05,9,1460,h2,5.27778,6,0.580645,847.742,848\n") !=
        std::string::npos);
  std::remove(path_a.c_str());
  std::remove(path_b.c_str());
}

TEST_CASE("sweep markdown mirrors the reference layout") {
  const auto result = run_command(kCli + " sweep --preset paper --format md");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find(
            "| N | tdm mss=1460 | h2 mss=1460 | tdm mss=536 | h2 mss=536 |") !=
        std::string::npos);
  CHECK(result.output.find("| mean | 1482 | 742 | 544 | 273 |") !=
        std::string::npos);
}

TEST_CASE("figure commands emit csv and svg") {
  const auto users = run_command(kCli + " figure users");
  CHECK(users.exit_code == 0);
  CHECK(users.output.rfind("x,series,y\n", 0) == 0);
  CHECK(users.output.find("2,rho=0.01,297\n") != std::string::npos);

  const auto ratio = run_command(kCli + " figure ratio");
  CHECK(ratio.exit_code == 0);
  CHECK(ratio.output.find("mean_of_ratios_mss1460") != std::string::npos);
  CHECK(ratio.output.find("ratio_of_means_mss536") != std::string::npos);

  const std::string svg_path = tmp_path("objsize_users.svg");
  CHECK(run_command(kCli + " figure users --format svg --out " + svg_path)
            .exit_code == 0);
  const std::string svg = slurp(svg_path);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  std::remove(svg_path.c_str());
}

TEST_CASE("simulate is deterministic per seed") {
  const std::string command =
      kCli + " simulate --lambda 0.5 --service exp:1 --departures 30000"
             " --batches 20 --seed 9";
  const auto first = run_command(command);
  const auto second = run_command(command);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("seed = 9\n") != std::string::npos);

  const auto other = run_command(
      kCli + " simulate --lambda 0.5 --service exp:1 --departures 30000"
             " --batches 20 --seed 10");
  CHECK(other.output != first.output);
}

TEST_CASE("simulate accepts vacation laws and h2 page services") {
  const auto result = run_command(
      kCli + " simulate --lambda 0.125 --service det:4 --vacation det:4"
             " --departures 20000 --batches 10 --seed 4");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("mean_wait = ") != std::string::npos);

  const auto h2 = run_command(
      kCli + " simulate --lambda 0.1 --service h2:0.1,9 --departures 20000"
             " --batches 10 --seed 5");
  CHECK(h2.exit_code == 0);

  const auto unstable = run_command(
      kCli + " simulate --lambda 2 --service exp:1 2>/dev/null");
  CHECK(unstable.exit_code == 3);

  const auto malformed = run_command(
      kCli + " simulate --lambda 0.5 --service bogus 2>/dev/null");
  CHECK(malformed.exit_code == 2);
}

TEST_CASE("validate passes at a loose tolerance and fails at an absurd one") {
  const auto quick = run_command(
      kCli + " validate --departures 20000 --tol 0.25 --seed 2");
  CHECK(quick.exit_code == 0);
  CHECK(quick.output.find("[PASS] schedule-oracle") != std::string::npos);
  CHECK(quick.output.find("lambda=0.1 service=det vacation=none") !=
        std::string::npos);

  const auto strict = run_command(
      kCli + " validate --departures 20000 --tol 1e-9 --seed 2 >/dev/null");
  CHECK(strict.exit_code == 5);
}
