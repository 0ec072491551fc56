// Copyright 2026 The ctcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <doctest.h>

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + CTCSIM_CLI_PATH " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("davies subcommand prints the evolved state") {
  const CliResult r = run_cli(
      "davies --p 0.3 --A 1 --G 1 --t 50 --state plus --precision 8");
  CHECK(r.exit_code == 0);
  // long-time limit is the thermal state diag(0.7, 0.3)
  CHECK(contains(r.output, "(7.0000000e-01, 0.0000000e+00)"));
  CHECK(contains(r.output, "(3.0000000e-01, 0.0000000e+00)"));
  CHECK(contains(r.output, "cptp: valid"));
  CHECK(contains(r.output, "gibbs_distance: "));
}

TEST_CASE("deutsch subcommand, noisy fixed point") {
  const CliResult r =
      run_cli("deutsch --input minus --p 0.25 --A 1 --G 1 --t 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "solution dimension: 0"));
  CHECK(contains(r.output, "selection: unique"));
  CHECK(contains(r.output, "5.809502448295"));
}

TEST_CASE("precision flag placement") {
  const CliResult before =
      run_cli("--precision 8 deutsch --input minus --p 0.25 --A 1 --G 1 --t 1");
  const CliResult after =
      run_cli("deutsch --input minus --p 0.25 --A 1 --G 1 --t 1 --precision 8");
  CHECK(before.exit_code == 0);
  CHECK(after.exit_code == 0);
  CHECK(before.output == after.output);
  CHECK(contains(before.output, "5.8095024e-01"));
}

TEST_CASE("configuration file supplies defaults") {
  const std::string cfg = "/tmp/ctcsim_cli_test.ini";
  std::ofstream(cfg) << "precision=8\n";
  const CliResult r = run_cli("--config " + cfg +
                              " deutsch --input minus --p 0.25 --A 1 --G 1 "
                              "--t 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "5.8095024e-01"));
  std::remove(cfg.c_str());
}

TEST_CASE("unproven subcommand reports the ambiguity") {
  const CliResult noiseless = run_cli("unproven --precision 8");
  CHECK(noiseless.exit_code == 0);
  CHECK(contains(noiseless.output, "solution dimension: 1"));
  CHECK(contains(noiseless.output, "selection: max_entropy"));
  CHECK(contains(noiseless.output, "feasible interval: [-1.0000000e+00, "
                                   "1.0000000e+00]"));
  CHECK(contains(noiseless.output, "entropy(tau): 1.0000000e+00"));

  const CliResult noisy =
      run_cli("unproven --p 0.3 --A 1 --G 1 --t 1 --precision 8");
  CHECK(noisy.exit_code == 0);
  CHECK(contains(noisy.output, "solution dimension: 0"));
  CHECK(contains(noisy.output, "(7.0000000e-01, 0.0000000e+00)"));
}

TEST_CASE("pctc subcommand") {
  const CliResult noiseless = run_cli("pctc --input 1 --precision 8");
  CHECK(noiseless.exit_code == 0);
  CHECK(contains(noiseless.output, "postselection_weight: 1.2500000e-01"));

  const CliResult noisy =
      run_cli("pctc --input 1 --p 0.25 --A 1 --G 1 --t 1 --precision 8");
  CHECK(noisy.exit_code == 0);
  CHECK(contains(noisy.output, "(5.8095024e-01, 0.0000000e+00)"));
  CHECK(contains(noisy.output, "postselection_weight: 2.0401507e-01"));
}

TEST_CASE("zero postselection probability exits with code 4") {
  const CliResult r = run_cli("pctc --input 0 --resource 01");
  CHECK(r.exit_code == 4);
  CHECK(contains(r.output, "postselection probability zero"));
}

TEST_CASE("argument errors exit with code 2") {
  CHECK(run_cli("davies --p 0.25 --A 1 --G 1").exit_code == 2);   // missing t
  CHECK(run_cli("deutsch --input bogus --p 0.25 --A 1 --G 1 --t 1")
            .exit_code == 2);
  CHECK(run_cli("deutsch --p 0.25 --A 1 --G 0.1 --t 1").exit_code == 2);
  CHECK(run_cli("--precision 20 deutsch").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("sweep writes the CSV") {
  const std::string csv = "/tmp/ctcsim_sweep_test.csv";
  const CliResult r = run_cli("sweep --p 0.25 --A 1 --G 1 --t 0.5:1.5:3 "
                              "--out " + csv);
  CHECK(r.exit_code == 0);
  const std::string body = slurp(csv);
  CHECK(contains(
      body, "p,A,G,omega,t,Q_minus,Q_zero,R_numeric,R_paper,R_discrepancy"));
  int lines = 0;
  for (char c : body) lines += (c == '\n');
  CHECK(lines == 4);  // header plus three grid points
  std::remove(csv.c_str());

  CHECK(run_cli("sweep --p 0.25 --A 1 --G 1 --t 1 "
                "--out /nonexistent/dir/x.csv").exit_code == 5);
  CHECK(run_cli("sweep --p 0.25 --A 1 --G 0.2 --t 1 --out " + csv)
            .exit_code == 2);
}

TEST_CASE("conjecture harness is reproducible and honors the env seed") {
  const CliResult a = run_cli("conjecture --trials 20 --seed 7");
  const CliResult b = run_cli("conjecture --trials 20 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(contains(a.output, "trials: 20"));
  CHECK(contains(a.output, "seed: 7"));
  CHECK(contains(a.output, "violations: 0"));

  const CliResult env = run_cli("conjecture --trials 20", "CTCSIM_SEED=7");
  CHECK(env.output == a.output);
  // explicit flag wins over the environment
  const CliResult flag =
      run_cli("conjecture --trials 20 --seed 7", "CTCSIM_SEED=99");
  CHECK(flag.output == a.output);

  CHECK(run_cli("conjecture --trials 0").exit_code == 2);
}
