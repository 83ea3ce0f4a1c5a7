// Copyright 2026 The qht Authors
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

// Command-line driver: property sweeps (verify), error-tradeoff curves
// (tradeoff), second-order tables (stein), and the convolution-vs-direct
// cross-check (oracle).  Exit codes: 0 success, 1 property failure,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "qht/asymptotics.hpp"
#include "qht/bounds.hpp"
#include "qht/hypothesis.hpp"
#include "qht/pair_io.hpp"
#include "qht/verify.hpp"

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw qht::parse_error("cannot write output file " + out_path);
  out << text;
}

struct CommonOpts {
  std::uint64_t seed = 42;
  int dim = 2;
  int trials = 100;
  std::vector<double> eps;
  std::vector<int> n_list;
  std::string pair_file;
  std::string out_path;
  double prune_tol = 1e-18;
  double tol = 1e-9;
  bool no_timestamp = false;
};

int cmd_verify(const CommonOpts& opts) {
  qht::VerifyConfig config;
  config.seed = opts.seed;
  config.dim = opts.dim;
  config.trials = opts.trials;
  if (!opts.eps.empty()) config.eps_grid = opts.eps;
  const qht::VerifyReport report = qht::run_verify(config);
  write_output(qht::report_to_json(report, !opts.no_timestamp) + "\n",
               opts.out_path);
  return report.ok() ? 0 : 1;
}

int cmd_oracle(const CommonOpts& opts) {
  qht::OracleConfig config;
  config.seed = opts.seed;
  config.pairs = opts.trials;
  if (!opts.n_list.empty()) config.n_list = opts.n_list;
  if (!opts.eps.empty()) config.eps_list = opts.eps;
  config.tol = opts.tol;
  const qht::VerifyReport report = qht::run_oracle(config);
  write_output(qht::report_to_json(report, !opts.no_timestamp) + "\n",
               opts.out_path);
  return report.ok() ? 0 : 1;
}

int cmd_tradeoff(const CommonOpts& opts) {
  const qht::StatePair pair = qht::load_state_pair(opts.pair_file);
  std::string csv =
      "eps,alpha_keli,beta_keli,keli_bound,alpha_np,beta_np,"
      "bayes_risk_min,chernoff_value,chernoff_s_star\n";
  for (double eps : opts.eps) {
    const double p = 1.0 / (1.0 + eps);
    const qht::Test t_kl = qht::keli_test(pair, eps);
    const qht::ErrorPair e_kl = qht::error_pair(pair, t_kl);
    const qht::Test t_np = qht::neyman_pearson_test(pair, p);
    const qht::ErrorPair e_np = qht::error_pair(pair, t_np);
    const qht::ChernoffResult chernoff = qht::chernoff_bound(pair, p);
    csv += fmt(eps) + "," + fmt(e_kl.alpha) + "," + fmt(e_kl.beta) + "," +
           fmt(qht::keli_beta_bound(pair, eps)) + "," + fmt(e_np.alpha) + "," +
           fmt(e_np.beta) + "," + fmt(qht::min_bayes_risk_closed_form(pair, p)) +
           "," + fmt(chernoff.value) + "," + fmt(chernoff.s_star) + "\n";
  }
  write_output(csv, opts.out_path);
  return 0;
}

int cmd_stein(const CommonOpts& opts) {
  const qht::StatePair pair = qht::load_state_pair(opts.pair_file);
  if (opts.eps.size() != 1)
    throw CLI::ValidationError("stein", "exactly one --eps value is required");
  std::vector<int> n_list = opts.n_list;
  if (n_list.empty()) n_list = {25, 100, 400};
  const auto rows = qht::stein_experiment(pair, opts.eps[0], n_list,
                                          qht::kDefaultMergeTol, opts.prune_tol);
  std::string csv =
      "n,log_eps_n,alpha_lower,alpha_upper,minus_log_beta,predicted\n";
  for (const qht::SteinRow& row : rows)
    csv += std::to_string(row.n) + "," + fmt(row.log_eps_n) + "," +
           fmt(row.alpha_tail.lower) + "," + fmt(row.alpha_tail.upper) + "," +
           fmt(row.minus_log_beta) + "," + fmt(row.predicted) + "\n";
  write_output(csv, opts.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum hypothesis testing numerics: modular-operator test "
               "construction, error bounds, and second-order asymptotics"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto add_common = [&opts](CLI::App* sub, bool needs_pair) {
    sub->add_option("--seed", opts.seed, "Base RNG seed");
    sub->add_option("--dim", opts.dim, "State dimension")
        ->check(CLI::PositiveNumber);
    sub->add_option("--trials", opts.trials, "Number of sampled instances")
        ->check(CLI::PositiveNumber);
    sub->add_option("--eps", opts.eps, "Comma-separated eps values")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sub->add_option("--n", opts.n_list, "Comma-separated copy counts")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    auto* pair_opt =
        sub->add_option("--pair", opts.pair_file, "State-pair JSON file");
    if (needs_pair) pair_opt->required();
    sub->add_option("--out", opts.out_path, "Output file (default stdout)");
    sub->add_option("--prune-tol", opts.prune_tol,
                    "Convolution pruning threshold");
    sub->add_option("--tol", opts.tol, "Comparison tolerance");
    sub->add_flag("--no-timestamp", opts.no_timestamp,
                  "Omit the timestamp field from JSON reports");
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the bound/optimality property sweep on random pairs");
  add_common(verify, false);
  CLI::App* tradeoff = app.add_subcommand(
      "tradeoff", "Error-tradeoff CSV for a state pair over an eps grid");
  add_common(tradeoff, true);
  CLI::App* stein = app.add_subcommand(
      "stein", "Second-order expansion table for i.i.d. copies of a pair");
  add_common(stein, true);
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Cross-check convolution path against direct tensor powers");
  add_common(oracle, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(opts);
    if (tradeoff->parsed()) {
      if (opts.eps.empty())
        throw CLI::ValidationError("tradeoff", "--eps grid must be nonempty");
      return cmd_tradeoff(opts);
    }
    if (stein->parsed()) return cmd_stein(opts);
    if (oracle->parsed()) return cmd_oracle(opts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qht::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qht::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
