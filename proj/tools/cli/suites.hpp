#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <hypnorm/normest.hpp>

#include "report.hpp"

namespace hypnorm::cli {

struct SuiteConfig {
  double mu = 1.0;
  double sigma = 0.0;
  double p = 2.0;
  int n = 1;
  int order = 256;
  double eta_min = 1e-6;
  std::uint64_t seed = kDefaultSeed;
  int draws = 100;
};

inline constexpr double kIdentityTolerance = 1e-7;

/// Euler formula, Euler transform, Gauss summation and the Beta integral of 2F1,
/// each on `cfg.draws` random parameter sets; one record per identity holding
/// the worst draw.
std::vector<ReportRecord> run_identities(const SuiteConfig& cfg);

/// Closed-form norm of F_sigma against the Schur, sweep, Nystrom and L^1
/// routes at (mu, sigma, p), plus bilinear-form twins.
std::vector<ReportRecord> run_interval_norms(const SuiteConfig& cfg);

/// Ball-side formulas at (n, sigma, p) and the fixed printed values.
std::vector<ReportRecord> run_ball(const SuiteConfig& cfg);

/// Berezin transform norms and the disc cross-checks.
std::vector<ReportRecord> run_berezin(const SuiteConfig& cfg);

/// identities | interval-norms | ball | berezin | all; std::invalid_argument otherwise.
std::vector<ReportRecord> run_suite(const std::string& name, const SuiteConfig& cfg);

bool all_passed(const std::vector<ReportRecord>& records);

}  // namespace hypnorm::cli
