#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef VACPOL_CLI_PATH
#define VACPOL_CLI_PATH ""
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

int counter = 0;

RunResult run_cli(const std::string& args) {
  const std::string path =
      "cli_out_" + std::to_string(counter++) + ".txt";
  const std::string cmd = std::string(VACPOL_CLI_PATH) + " " + args + " > " +
                          path + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(path.c_str());
  return {WEXITSTATUS(status), buf.str()};
}

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      seen_header = true;  // column header
      continue;
    }
    rows.push_back(line);
  }
  return rows;
}

std::vector<double> split_row(const std::string& row) {
  std::vector<double> out;
  std::istringstream in(row);
  std::string field;
  while (std::getline(in, field, ',')) {
    out.push_back(field == "POLE" ? -1e99 : std::strtod(field.c_str(), nullptr));
  }
  return out;
}

} // namespace

TEST_CASE("sweep includes the Q = 0 boundary on a linear grid") {
  const auto r = run_cli(
      "sweep --quantity delta_pi --preset sm_paper --from 0 --to 0.01 "
      "--points 5 --scale linear");
  REQUIRE(r.exit_code == 0);
  const auto rows = data_rows(r.output);
  REQUIRE(rows.size() == 5);
  const auto first = split_row(rows[0]);
  CHECK(first[0] == 0.0);
  CHECK(first[1] == 0.0);  // delta_pi(0) = 0
  CHECK(first[3] == 1.0);  // eps ratio
  CHECK(first[4] == 1.0);  // alpha ratio
}

TEST_CASE("alpha_eff sweep is strictly increasing over a spacelike grid") {
  const auto r = run_cli(
      "sweep --quantity alpha_eff --preset sm_paper --from 0.001 --to 10 "
      "--points 12 --scale log --regime spacelike");
  REQUIRE(r.exit_code == 0);
  const auto rows = data_rows(r.output);
  REQUIRE(rows.size() == 12);
  double prev = 0.0;
  for (const auto& row : rows) {
    const auto v = split_row(row);
    CHECK(v[4] > prev);  // alpha_eff_re_ratio column
    prev = v[4];
  }
}

TEST_CASE("asymptotic sweep mode") {
  const auto r = run_cli(
      "sweep --quantity delta_pi --preset sm_paper --from 10 --to 1000 "
      "--points 4 --mode asymptotic");
  REQUIRE(r.exit_code == 0);
  const auto rows = data_rows(r.output);
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(split_row(row)[2] == 0.0);  // asymptotic form is real
  }
}

TEST_CASE("registry dump reports the fermion-table charge sum") {
  const auto r = run_cli("registry dump --preset sm_fermions");
  REQUIRE(r.exit_code == 0);
  const auto pos = r.output.find("\"effective_charge_sum\": ");
  REQUIRE(pos != std::string::npos);
  const double sum = std::strtod(
      r.output.c_str() + pos + std::string("\"effective_charge_sum\": ").size(),
      nullptr);
  CHECK(sum == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(r.output.find("\"species_count\": 9") != std::string::npos);
}

TEST_CASE("landau report for the quoted preset") {
  const auto r = run_cli("landau --preset sm_paper");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("hbar_c_lambda_l_gev") != std::string::npos);
  CHECK(r.output.find("3.625652015") != std::string::npos);
  CHECK(r.output.find("\"closure\": 1.0") != std::string::npos);
}

TEST_CASE("wave-check passes on shell and fails detuned") {
  const auto ok = run_cli("wave-check --k 0,0,1e7 --e0 1,0,0");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("\"pass\": true") != std::string::npos);

  const auto detuned =
      run_cli("wave-check --k 0,0,1e7 --e0 1,0,0 --omega-scale 0.5 "
              "--preset sm_paper");
  CHECK(detuned.exit_code == 1);
  CHECK(detuned.output.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("usage and validation failures exit with 2") {
  CHECK(run_cli("sweep --quantity delta_pi --from 1 --to 10 --points 3")
            .exit_code == 2);  // registry missing
  CHECK(run_cli("sweep --quantity delta_pi --preset sm_paper --from 1 "
                "--to 10 --points 1")
            .exit_code == 2);  // too few points
  CHECK(run_cli("sweep --quantity delta_pi --preset sm_paper --from 0 "
                "--to 10 --points 3 --scale log")
            .exit_code == 2);  // zero lower bound on a log grid
  CHECK(run_cli("sweep --quantity nonsense --preset sm_paper --from 1 "
                "--to 10 --points 3")
            .exit_code == 2);
  CHECK(run_cli("landau --preset sm_2024").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("numerical failure exits with 3") {
  const auto r = run_cli(
      "potential --preset sm_paper --from 0.0001 --to 0.001 --points 2 "
      "--tolerance 1e-14 --max-intervals 4");
  CHECK(r.exit_code == 3);
}

TEST_CASE("byte-identical reruns") {
  const std::vector<std::string> commands = {
      "sweep --quantity delta_pi --preset sm_fermions --from 0.001 --to 10 "
      "--points 9",
      "landau --preset susy_doubled",
      "registry dump --preset sm_paper",
  };
  for (const auto& cmd : commands) {
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
  }
}
