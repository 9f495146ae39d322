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
#include "polya/cli.hpp"

#include <CLI11.hpp>
#include <Eigen/Dense>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "polya/certify.hpp"
#include "polya/io.hpp"
#include "polya/psd.hpp"

namespace polya {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitInconclusive = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::optional<std::string>& output_path) {
  if (!output_path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + *output_path + "'");
  out << text;
}

int outcome_status(Outcome outcome) {
  switch (outcome) {
    case Outcome::certified:
      return kExitOk;
    case Outcome::refuted:
      return kExitRefuted;
    case Outcome::inconclusive:
      return kExitInconclusive;
  }
  return kExitError;
}

int run_search(const MatrixForm& form, const JobConfig& config) {
  SearchOptions options;
  options.m_max = config.m_max;
  options.grid_depth = config.grid_depth;
  options.compute_margin = config.mode == JobConfig::Mode::margin;

  SearchReport report;
  if (config.mode == JobConfig::Mode::refute_only) {
    report.m_max = 0;
    report.grid_depth = config.grid_depth;
    if (auto ce = counterexample_search(form, config.grid_depth)) {
      report.outcome = Outcome::refuted;
      report.counterexample = std::move(ce);
    } else {
      report.outcome = Outcome::inconclusive;
    }
  } else {
    report = polya_exponent_search(form, options);
  }

  write_output(render_json(emit_report(report, config.include_witnesses)),
               config.output_path);
  return outcome_status(report.outcome);
}

// Scans the grid for the minimal pure-state value over (x, v) with x a grid
// point and v a rationalized eigendirection of B(x). An exact nonpositive
// value is a refutation and reported as such.
int run_pure_state_scan(const MatrixForm& form, const JobConfig& config) {
  const auto betas = exponents_of_degree(form.n_vars(), config.grid_depth);

  std::optional<Rational> min_value;
  std::vector<Rational> argmin_point;
  std::vector<Rational> argmin_direction;

  for (const MultiIndex& beta : betas) {
    std::vector<Rational> x;
    x.reserve(static_cast<std::size_t>(form.n_vars()));
    for (int i = 0; i < form.n_vars(); ++i) {
      Rational c(beta[i], config.grid_depth);
      c.canonicalize();
      x.push_back(std::move(c));
    }
    const SymMatrixQ value = form.evaluate(x);

    std::vector<Rational> direction;
    if (const PdResult pd = is_pd_exact(value); !pd.is_pd) {
      direction = refuting_direction(value);
    } else {
      // Rationalize the float eigendirection of the smallest eigenvalue.
      Eigen::MatrixXd m(form.size(), form.size());
      for (int i = 0; i < form.size(); ++i) {
        for (int j = 0; j < form.size(); ++j) m(i, j) = to_double(value.at(i, j));
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
      const Eigen::VectorXd v = solver.eigenvectors().col(0);
      bool nonzero = false;
      for (int i = 0; i < form.size(); ++i) {
        direction.push_back(dyadic_round(v(i), 20));
        nonzero = nonzero || direction.back() != 0;
      }
      if (!nonzero) direction[0] = 1;
    }

    const Rational state_value = pure_state_evaluate(form, x, direction);
    if (!min_value || state_value < *min_value) {
      min_value = state_value;
      argmin_point = std::move(x);
      argmin_direction = std::move(direction);
    }
  }

  if (*min_value <= 0) {
    SearchReport report;
    report.outcome = Outcome::refuted;
    Rational norm = 0;
    for (const Rational& c : argmin_direction) norm += c * c;
    report.counterexample =
        Counterexample{argmin_point, argmin_direction, *min_value * norm};
    write_output(render_json(emit_report(report, false)), config.output_path);
    return kExitRefuted;
  }

  nlohmann::ordered_json out;
  out["outcome"] = "pure-state-scan";
  out["grid_depth"] = config.grid_depth;
  out["points"] = betas.size();
  out["min_value"] = rational_to_string(*min_value);
  nlohmann::ordered_json point = nlohmann::ordered_json::array();
  for (const Rational& c : argmin_point) point.push_back(rational_to_string(c));
  nlohmann::ordered_json dir = nlohmann::ordered_json::array();
  for (const Rational& c : argmin_direction) dir.push_back(rational_to_string(c));
  out["argmin_point"] = std::move(point);
  out["argmin_direction"] = std::move(dir);
  write_output(render_json(out), config.output_path);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Polya positivity certificates for symmetric matrices of forms"};
  app.require_subcommand(1);

  struct ModeSpec {
    const char* name;
    const char* description;
    JobConfig::Mode mode;
    bool has_m_max;
    bool has_witnesses;
  };
  static constexpr ModeSpec kModes[] = {
      {"certify", "search for the least m making Sigma^m*B strict", JobConfig::Mode::certify,
       true, true},
      {"refute-only", "only scan the simplex grid for a counterexample",
       JobConfig::Mode::refute_only, false, false},
      {"margin", "certify and report the approximate grid positivity margin",
       JobConfig::Mode::margin, true, true},
      {"pure-state-scan", "scan pure-state values over the grid",
       JobConfig::Mode::pure_state_scan, false, false},
  };

  struct Parsed {
    JobConfig config;
    std::string input_path;
    std::string output_path;
    CLI::App* command = nullptr;
  } parsed[4];

  for (std::size_t k = 0; k < 4; ++k) {
    const ModeSpec& spec = kModes[k];
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    parsed[k].config.mode = spec.mode;
    parsed[k].command = sub;
    sub->add_option("input", parsed[k].input_path, "matrix form document (JSON)")->required();
    if (spec.has_m_max) {
      sub->add_option("--m-max", parsed[k].config.m_max, "largest exponent to try")
          ->check(CLI::NonNegativeNumber);
    }
    sub->add_option("--grid-depth", parsed[k].config.grid_depth,
                    "barycentric grid depth for refutation scans")
        ->check(CLI::PositiveNumber);
    if (spec.has_witnesses) {
      sub->add_flag("--witnesses", parsed[k].config.include_witnesses,
                    "include full minor vectors in certified reports");
    }
    sub->add_option("--output", parsed[k].output_path,
                    "write the report here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      std::cout << app.help();
      return kExitOk;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    for (std::size_t k = 0; k < 4; ++k) {
      if (!parsed[k].command->parsed()) continue;
      if (!parsed[k].output_path.empty()) {
        parsed[k].config.output_path = parsed[k].output_path;
      }
      const MatrixForm form = parse_matrix_form(read_file(parsed[k].input_path));
      if (parsed[k].config.mode == JobConfig::Mode::pure_state_scan) {
        return run_pure_state_scan(form, parsed[k].config);
      }
      return run_search(form, parsed[k].config);
    }
    std::cerr << "error: no subcommand given\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace polya
