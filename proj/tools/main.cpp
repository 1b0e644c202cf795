// hypnorm: run the verification suites and print their reports.
//
// Exit status: 0 when every check passes (flagged records included),
// 1 when a check fails, 2 on a usage or configuration error.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <hypnorm/errors.hpp>

#include "cli/report.hpp"
#include "cli/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace hypnorm::cli;

  CLI::App app{"Verify operator-norm formulas for the hypergeometric integral operator"};
  SuiteConfig cfg;
  std::string suite = "all";
  std::string format = "aligned-text";

  app.add_option("--suite", suite, "identities | interval-norms | ball | berezin | all")
      ->check(CLI::IsMember({"identities", "interval-norms", "ball", "berezin", "all"}))
      ->capture_default_str();
  app.add_option("--mu", cfg.mu, "Weight exponent mu > 0 of d mu = mu t^(mu-1) dt")->capture_default_str();
  app.add_option("--sigma", cfg.sigma, "Kernel exponent sigma > -1")->capture_default_str();
  app.add_option("--p", cfg.p, "Lebesgue exponent p >= 1")->capture_default_str();
  app.add_option("--n", cfg.n, "Complex dimension of the unit ball")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--order", cfg.order, "Nystrom discretization order")->check(CLI::Range(2, 4096))->capture_default_str();
  app.add_option("--eta-min", cfg.eta_min, "Smallest eta of the lower-bound sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "json | csv | aligned-text")
      ->check(CLI::IsMember({"json", "csv", "aligned-text", "text"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random draws and power-method restarts")->capture_default_str();
  app.add_option("--draws", cfg.draws, "Random draws per identity")->check(CLI::Range(1, 100000))->capture_default_str();
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::vector<ReportRecord> records;
  try {
    records = run_suite(suite, cfg);
  } catch (const hypnorm::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "check aborted: " << e.what() << '\n';
    return kExitFail;
  }

  try {
    emit_table(records, parse_format(format), std::cout);
  } catch (const std::exception& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return kExitFail;
  }
  return all_passed(records) ? kExitPass : kExitFail;
}
