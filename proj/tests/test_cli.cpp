/*
   Copyright 2026 The polya-cert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli_bin;
std::filesystem::path g_work_dir;

struct RunResult {
  int status = -1;
  std::string stdout_text;
};

// Runs the CLI through the shell; extra_env like "POLYA_CERT_THREADS=2 ".
RunResult run_cli(const std::string& args, const std::string& extra_env = "") {
  const auto out_path = g_work_dir / "stdout.txt";
  const std::string command =
      extra_env + "'" + g_cli_bin + "' " + args + " > '" + out_path.string() + "' 2>/dev/null";
  const int raw = std::system(command.c_str());
  RunResult result;
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.stdout_text = buffer.str();
  return result;
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
  const auto path = g_work_dir / name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kQuadricDoc = R"({"n_vars":2,"size":1,"degree":2,
  "coeffs":[{"alpha":[2,0],"matrix":[[1]]},
            {"alpha":[1,1],"matrix":[["-1"]]},
            {"alpha":[0,2],"matrix":[[1]]}]})";

const char* kDiagDoc = R"({"n_vars":2,"size":2,"degree":1,
  "coeffs":[{"alpha":[1,0],"matrix":[[1,0],[0,0]]},
            {"alpha":[0,1],"matrix":[[0,0],[0,1]]}]})";

}  // namespace

TEST_CASE("certify exits 0 and reports m = 3") {
  const auto input = write_file("quadric.json", kQuadricDoc);
  const RunResult run = run_cli("certify '" + input.string() + "'");
  CHECK(run.status == 0);
  CHECK(run.stdout_text.find("\"outcome\": \"certified\"") != std::string::npos);
  CHECK(run.stdout_text.find("\"m\": 3") != std::string::npos);
}

TEST_CASE("refuted inputs exit 2") {
  const auto input = write_file("diag.json", kDiagDoc);
  const RunResult run = run_cli("certify '" + input.string() + "'");
  CHECK(run.status == 2);
  CHECK(run.stdout_text.find("\"outcome\": \"refuted\"") != std::string::npos);
}

TEST_CASE("inconclusive searches exit 3") {
  const auto input = write_file("quadric.json", kQuadricDoc);
  const RunResult run = run_cli("certify '" + input.string() + "' --m-max 0 --grid-depth 2");
  CHECK(run.status == 3);
  CHECK(run.stdout_text.find("\"outcome\": \"inconclusive\"") != std::string::npos);
}

TEST_CASE("input errors exit 1") {
  CHECK(run_cli("certify /nonexistent/input.json").status == 1);
  const auto bad = write_file("bad.json", "{\"n_vars\": 2}");
  CHECK(run_cli("certify '" + bad.string() + "'").status == 1);
  CHECK(run_cli("certify").status == 1);           // missing positional
  CHECK(run_cli("unknown-mode x.json").status == 1);
}

TEST_CASE("--output writes the same report to a file") {
  const auto input = write_file("quadric.json", kQuadricDoc);
  const auto out = g_work_dir / "report.json";
  const RunResult run =
      run_cli("certify '" + input.string() + "' --output '" + out.string() + "'");
  CHECK(run.status == 0);
  CHECK(run.stdout_text.empty());
  std::ifstream in(out);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str().find("\"m\": 3") != std::string::npos);
}

TEST_CASE("refute-only and margin modes") {
  const auto quad = write_file("quadric.json", kQuadricDoc);
  const auto diag = write_file("diag.json", kDiagDoc);

  CHECK(run_cli("refute-only '" + diag.string() + "' --grid-depth 1").status == 2);
  CHECK(run_cli("refute-only '" + quad.string() + "'").status == 3);

  const RunResult margin = run_cli("margin '" + quad.string() + "' --grid-depth 8");
  CHECK(margin.status == 0);
  CHECK(margin.stdout_text.find("\"margin_approx\": \"1/4\"") != std::string::npos);

  const RunResult scan = run_cli("pure-state-scan '" + quad.string() + "' --grid-depth 8");
  CHECK(scan.status == 0);
  CHECK(scan.stdout_text.find("\"min_value\": \"1/4\"") != std::string::npos);
  CHECK(run_cli("pure-state-scan '" + diag.string() + "' --grid-depth 1").status == 2);
}

TEST_CASE("reports are byte-identical across thread counts") {
  const auto input = write_file("quadric.json", kQuadricDoc);
  const RunResult one =
      run_cli("certify '" + input.string() + "' --witnesses", "POLYA_CERT_THREADS=1 ");
  const RunResult eight =
      run_cli("certify '" + input.string() + "' --witnesses", "POLYA_CERT_THREADS=8 ");
  CHECK(one.status == 0);
  CHECK(one.stdout_text == eight.stdout_text);
}

int main(int argc, char** argv) {
  doctest::Context context;
  int kept = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--cli-bin=", 0) == 0) {
      g_cli_bin = arg.substr(10);
    } else {
      argv[kept++] = argv[i];
    }
  }
  if (g_cli_bin.empty()) {
    std::fprintf(stderr, "usage: test_cli --cli-bin=<path-to-polya-cert> [doctest args]\n");
    return 1;
  }
  g_work_dir = std::filesystem::temp_directory_path() / "polya-cli-test";
  std::filesystem::create_directories(g_work_dir);
  context.applyCommandLine(kept, argv);
  return context.run();
}
