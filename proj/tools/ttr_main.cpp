// ttr: exact top-to-random shuffle distributions, guessing strategies and
// their certification from the command line.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ttr/commands.hpp"

namespace {

struct OutputOptions {
  std::string format = "csv";
  std::string out;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "write to this path instead of stdout");
}

int emit(const ttr::CommandOutcome& outcome, const OutputOptions& o) {
  const ttr::Format fmt = ttr::parse_format(o.format);
  if (o.out.empty()) {
    ttr::write_record(std::cout, outcome.record, fmt);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << o.out << " for writing\n";
      return ttr::kExitUsage;
    }
    ttr::write_record(file, outcome.record, fmt);
  }
  if (!outcome.diagnostic.empty()) std::cerr << outcome.diagnostic << (outcome.diagnostic.back() == '\n' ? "" : "\n");
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of top-to-random shuffles and no-feedback card guessing"};
  app.require_subcommand(1);
  OutputOptions output;
  std::function<ttr::CommandOutcome()> run;

  ttr::MatrixArgs matrix;
  auto* c_matrix = app.add_subcommand("matrix", "m-step position matrix P^m in long (j,k,value) form");
  c_matrix->add_option("--n", matrix.n, "deck size")->required();
  c_matrix->add_option("--m", matrix.m, "number of shuffles")->required();
  c_matrix->add_option("--method", matrix.method, "closed, power or spectral");
  c_matrix->add_flag("--verify", matrix.verify, "compute all three methods and require exact agreement");
  c_matrix->add_flag("--float", matrix.with_float, "add a value_float column");
  add_output_options(c_matrix, output);
  c_matrix->callback([&] { run = [&] { return ttr::cmd_matrix(matrix); }; });

  ttr::StrategyArgs strategy;
  auto* c_strategy = app.add_subcommand("strategy", "greedy-optimal vs half-and-half strategy per position");
  c_strategy->add_option("--n", strategy.n, "deck size (even, >= 4)")->required();
  c_strategy->add_option("--m", strategy.m, "number of shuffles (>= 1)")->required();
  add_output_options(c_strategy, output);
  c_strategy->callback([&] { run = [&] { return ttr::cmd_strategy(strategy); }; });

  ttr::ScanArgs scan;
  auto* c_scan = app.add_subcommand("scan", "certify the half-and-half strategy for every m in 1..m-max");
  c_scan->add_option("--n", scan.n, "deck size (even, >= 4)")->required();
  c_scan->add_option("--m-max", scan.m_max, "last shuffle count to scan")->required();
  add_output_options(c_scan, output);
  c_scan->callback([&] { run = [&] { return ttr::cmd_scan(scan); }; });

  ttr::ExpectationArgs expectation;
  std::string c_text;
  auto* c_expect = app.add_subcommand("expectation", "exact expected-score gap, optionally against e^{-c}");
  c_expect->add_option("--n", expectation.n, "deck size")->required();
  c_expect->add_option("--m", expectation.m, "number of shuffles (>= 1)")->required();
  c_expect->add_option("--strategy", expectation.strategy, "paper or greedy");
  auto* c_opt = c_expect->add_option("--c", c_text, "non-negative rational, e.g. 2, 3/2 or 0.5");
  add_output_options(c_expect, output);
  c_expect->callback([&] {
    if (c_opt->count() > 0) expectation.c = c_text;
    run = [&] { return ttr::cmd_expectation(expectation); };
  });

  ttr::VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "binomial inequalities and row monotonicity up to n-max");
  c_verify->add_option("--n-max", verify.n_max, "largest deck size checked")->required();
  c_verify->add_option("--negate-claim", verify.lemma_options.negate_claim,
                       "self-test: invert one binomial claim's comparison (e.g. lemma1-ii); verify must then fail");
  add_output_options(c_verify, output);
  c_verify->callback([&] { run = [&] { return ttr::cmd_verify(verify); }; });

  ttr::SimulateArgs simulate;
  auto* c_sim = app.add_subcommand("simulate", "seeded Monte Carlo shuffles compared against exact P^m");
  c_sim->add_option("--n", simulate.n, "deck size")->required();
  c_sim->add_option("--m", simulate.m, "shuffles per trial")->required();
  c_sim->add_option("--trials", simulate.trials, "number of independent trials")->required();
  c_sim->add_option("--seed", simulate.seed, "64-bit seed")->required();
  c_sim->add_option("--strategy", simulate.strategy, "none, paper or greedy");
  c_sim->add_option("--lanes", simulate.lanes, "parallel lanes with derived sub-seeds (default 1)");
  add_output_options(c_sim, output);
  c_sim->callback([&] { run = [&] { return ttr::cmd_simulate(simulate); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ttr::kExitUsage;
  }

  try {
    return emit(run(), output);
  } catch (const ttr::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return ttr::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return ttr::kExitUsage;
  }
}
