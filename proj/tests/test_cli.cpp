//
// Copyright 2026 The annealopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string dir = (fs::temp_directory_path() / "annealopt_cli").string();
  fs::create_directories(dir);
  const std::string out_file = dir + "/stdout.txt";
  const std::string cmd = std::string(ANNEALOPT_CLI_PATH) + " " + args + " > " +
                          out_file + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  result.stdout_text = ss.str();
  return result;
}

std::string write_config(const std::string& name, const std::string& body) {
  const fs::path dir = fs::temp_directory_path() / "annealopt_cli";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream out(path);
  out << body;
  return path.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("sample1d reports full acceptance on the uniform target") {
  const fs::path out = fs::temp_directory_path() / "annealopt_cli/s1";
  const std::string cfg = write_config("s1.json", R"({
    "sample1d": {"target": "uniform", "samples": 2000, "tv": false},
    "seed": 3,
    "output_dir": ")" + out.string() + R"("
  })");
  const RunResult r = run_cli("sample1d --config " + cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("acceptance 1") != std::string::npos);
  CHECK(fs::exists(out / "samples.csv"));
  CHECK(fs::exists(out / "manifest.json"));
}

TEST_CASE("sample1d tv diagnostic stays within the sampler bound") {
  const fs::path out = fs::temp_directory_path() / "annealopt_cli/s2";
  const std::string cfg = write_config("s2.json", R"({
    "sample1d": {"target": "exp5", "samples": 100000, "eps_tilde": 1e-3,
                  "bins": 100, "tv": true},
    "seed": 5,
    "output_dir": ")" + out.string() + R"("
  })");
  const RunResult r = run_cli("sample1d --config " + cfg);
  CHECK(r.exit_code == 0);
  // Parse the tv column out of diagnostics.csv.
  std::ifstream diag(out / "diagnostics.csv");
  std::string header, data;
  std::getline(diag, header);
  std::getline(diag, data);
  const double tv = std::stod(data.substr(data.rfind(',') + 1));
  CHECK(tv >= 0.0);
  CHECK(tv <= 0.02);
}

TEST_CASE("malformed config exits with code 2") {
  const std::string cfg = write_config("bad.json", "{ not json at all");
  const RunResult r = run_cli("sample1d --config " + cfg);
  CHECK(r.exit_code == 2);

  const std::string unknown = write_config("unknown.json", R"({
    "sample1d": {"target": "no-such-target"}, "output_dir": "/tmp/annealopt_cli/x"
  })");
  CHECK(run_cli("sample1d --config " + unknown).exit_code == 2);
}

TEST_CASE("anneal run: success, reproducibility, thread invariance") {
  const fs::path out1 = fs::temp_directory_path() / "annealopt_cli/a1";
  const fs::path out2 = fs::temp_directory_path() / "annealopt_cli/a2";
  const fs::path out3 = fs::temp_directory_path() / "annealopt_cli/a3";
  const auto cfg_for = [&](const fs::path& out) {
    return R"({
      "problem": {
        "body": {"kind": "ball", "dim": 2, "radius": 1.0},
        "objective": {"base": "quadratic", "xstar": [0.3, -0.2]},
        "oracle": {"kind": "exact", "rho": 0.025}
      },
      "algorithm": {"epsilon": 0.05, "m": 120},
      "seed": 7,
      "output_dir": ")" + out.string() + R"("
    })";
  };
  const std::string c1 = write_config("a1.json", cfg_for(out1));
  const std::string c2 = write_config("a2.json", cfg_for(out2));
  const std::string c3 = write_config("a3.json", cfg_for(out3));

  CHECK(run_cli("anneal --config " + c1 + " --threads 1").exit_code == 0);
  CHECK(run_cli("anneal --config " + c2 + " --threads 1").exit_code == 0);
  CHECK(run_cli("anneal --config " + c3 + " --threads 4").exit_code == 0);

  // Byte-identical CSVs across reruns and across thread counts.
  CHECK(slurp(out1 / "epoch_log.csv") == slurp(out2 / "epoch_log.csv"));
  CHECK(slurp(out1 / "best.csv") == slurp(out2 / "best.csv"));
  CHECK(slurp(out1 / "epoch_log.csv") == slurp(out3 / "epoch_log.csv"));
  CHECK(slurp(out1 / "best.csv") == slurp(out3 / "best.csv"));

  // The quadratic is minimized to the acceptance threshold.
  std::ifstream best(out1 / "best.csv");
  std::string header, data;
  std::getline(best, header);
  std::getline(best, data);
  const double best_value = std::stod(data.substr(0, data.find(',')));
  CHECK(best_value <= 0.1);
}

TEST_CASE("theory mode prints the step formula and refuses huge runs") {
  const fs::path out = fs::temp_directory_path() / "annealopt_cli/t1";
  const std::string cfg = write_config("t1.json", R"({
    "problem": {
      "body": {"kind": "ball", "dim": 10, "radius": 1.0},
      "objective": {"base": "quadratic"},
      "oracle": {"kind": "exact", "rho": 0.005}
    },
    "algorithm": {"epsilon": 0.05, "mode": "theory"},
    "seed": 1,
    "output_dir": ")" + out.string() + R"("
  })");
  const RunResult r = run_cli("anneal --config " + cfg);
  CHECK(r.exit_code == 2);
  CHECK(r.stdout_text.find("theory-mode") != std::string::npos);
  CHECK(r.stdout_text.find("practice") != std::string::npos);
}

TEST_CASE("verify subcommand passes on the registered targets") {
  const fs::path out = fs::temp_directory_path() / "annealopt_cli/v1";
  const std::string cfg = write_config("v1.json", R"({
    "verify": {"n_check": 9, "epsilon": 0.2, "temperatures": [1.0, 0.1],
                "trials": 2000},
    "seed": 1,
    "output_dir": ")" + out.string() + R"("
  })");
  const RunResult r = run_cli("verify --config " + cfg);
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(out / "verify.csv"));
}
