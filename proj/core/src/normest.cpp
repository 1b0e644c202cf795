#include "hypnorm/normest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

namespace hypnorm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Relative size of the t -> 1 tail dropped by the outer quadrature of the
// bilinear form.
constexpr double kTailTolerance = 1e-11;
// Largest log10 of kernel value times weight the inner quadrature may meet.
constexpr double kMaxLog10Kernel = 300.0;

// Distance of the kernel singularity s = 1/t from s = 1, relative to the unit interval.
double singularity_scale(double t, double one_minus_t) {
  return t > 0.0 ? one_minus_t / t : std::numeric_limits<double>::infinity();
}

// Evaluates f on every grid point, a few threads at a time.
template <class F>
std::vector<double> map_grid(const std::vector<GridPoint>& grid, F&& f) {
  std::vector<double> out(grid.size());
  const int n = static_cast<int>(grid.size());
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 8);
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < n; i += workers) out[i] = f(grid[i]);
      });
    }
  }
  return out;
}

void require_open_p(const LebesgueExponent& p, const char* who) {
  if (!(p.p() > 1.0)) throw DomainError(std::string(who) + ": requires 1 < p < inf");
}

}  // namespace

std::vector<GridPoint> supremum_grid(int chebyshev_points) {
  if (chebyshev_points < 1) throw DomainError("supremum_grid: need at least one Chebyshev point");
  std::vector<GridPoint> grid;
  grid.reserve(chebyshev_points + kRefinementLevels);
  for (int k = 0; k < chebyshev_points; ++k) {
    const double angle = std::numbers::pi * (k + 0.5) / chebyshev_points;
    // (1 - cos a)/2 = sin^2(a/2), (1 + cos a)/2 = cos^2(a/2)
    const double sh = std::sin(0.5 * angle);
    const double ch = std::cos(0.5 * angle);
    grid.push_back({sh * sh, ch * ch});
  }
  for (int k = 1; k <= kRefinementLevels; ++k) {
    const double u = std::ldexp(1.0, -k);
    grid.push_back({1.0 - u, u});
  }
  std::sort(grid.begin(), grid.end(), [](const GridPoint& a, const GridPoint& b) {
    return a.complement > b.complement;
  });
  return grid;
}

// ---------------------------------------------------------------------------

double l1_column_integral(const OperatorParams& params, double t, double one_minus_t, int panel_order) {
  const GradedJacobiRule rule(params.mu() - 1.0, 0.0, panel_order);
  const double inner = rule.integrate(
      [&](double s, double one_minus_s) { return kernel_hypergeometric(params, s, one_minus_s, t, one_minus_t); },
      singularity_scale(t, one_minus_t));
  return params.mu() * std::pow(one_minus_t, params.sigma()) * inner;
}

L1Estimate l1_norm_numeric(const OperatorParams& params, int grid_size) {
  L1Estimate est;
  const double x = params.mu() + 1.0 - params.lambda();
  const double y = params.mu() + 1.0;
  const DiagSup ds = diag_sup(x, y);
  est.growth = ds.growth;

  const auto grid = supremum_grid(grid_size);
  const auto values = map_grid(grid, [&](const GridPoint& g) {
    return l1_column_integral(params, g.x, g.complement);
  });
  const auto best = std::max_element(values.begin(), values.end());
  est.grid_sup = *best;
  est.argmax = grid[best - values.begin()].x;

  if (ds.growth == Growth::bounded) {
    est.endpoint = hyp2f1_at_one(x, x, y);
    est.value = std::max(est.grid_sup, est.endpoint);
  } else {
    est.coefficient = ds.value;
    est.exponent = ds.exponent;
    est.value = std::numeric_limits<double>::infinity();
  }
  return est;
}

// ---------------------------------------------------------------------------

double schur_ratio_right(const OperatorParams& params, const LebesgueExponent& p, double s, double one_minus_s,
                         int panel_order) {
  const double inv_p = 1.0 / p.p();
  const GradedJacobiRule rule(params.mu() - 1.0, params.sigma() - inv_p, panel_order);
  const double integral = rule.integrate(
      [&](double t, double one_minus_t) { return kernel_hypergeometric(params, s, one_minus_s, t, one_minus_t); },
      singularity_scale(s, one_minus_s));
  return std::pow(one_minus_s, inv_p) * params.mu() * integral;
}

double schur_ratio_left(const OperatorParams& params, const LebesgueExponent& p, double t, double one_minus_t,
                        int panel_order) {
  const double inv_q = p.inv_q();
  const GradedJacobiRule rule(params.mu() - 1.0, -inv_q, panel_order);
  const double integral = rule.integrate(
      [&](double s, double one_minus_s) { return kernel_hypergeometric(params, s, one_minus_s, t, one_minus_t); },
      singularity_scale(t, one_minus_t));
  return std::pow(one_minus_t, params.sigma() + inv_q) * params.mu() * integral;
}

SchurCheck schur_check(const OperatorParams& params, const LebesgueExponent& p, int grid_size) {
  require_open_p(p, "schur_check");
  SchurCheck out;
  out.bound = norm_formula(params, p);
  const auto grid = supremum_grid(grid_size);
  const auto right = map_grid(grid, [&](const GridPoint& g) {
    return schur_ratio_right(params, p, g.x, g.complement);
  });
  const auto left = map_grid(grid, [&](const GridPoint& g) {
    return schur_ratio_left(params, p, g.x, g.complement);
  });
  out.max_ratio_right = *std::max_element(right.begin(), right.end());
  out.max_ratio_left = *std::max_element(left.begin(), left.end());
  out.end_ratio_right = right.back();
  out.end_ratio_left = left.back();
  return out;
}

// ---------------------------------------------------------------------------

ExtremalFamily::ExtremalFamily(double mu, const LebesgueExponent& p, double theta, double theta_tilde)
    : mu_(mu), p_(p), theta_(theta), theta_tilde_(theta_tilde) {
  require_open_p(p, "ExtremalFamily");
  if (!(mu > 0.0)) throw DomainError("ExtremalFamily: mu must be positive");
  if (!(theta > 1.0)) throw DomainError("ExtremalFamily: theta must exceed 1, got " + std::to_string(theta));
  if (!(theta_tilde > -1.0)) {
    throw DomainError("ExtremalFamily: theta~ must exceed -1, got " + std::to_string(theta_tilde));
  }
  const double log_mu = std::log(mu);
  log_c_ = -(log_mu + log_beta(theta + mu, theta_tilde + 1.0)) / p.p();
  log_c_tilde_ = -(log_mu + log_beta(mu, vartheta_tilde() + 1.0)) * p.inv_q();
}

ExtremalFamily ExtremalFamily::on_path(double mu, const LebesgueExponent& p, double eta) {
  if (!(eta > 0.0)) throw DomainError("ExtremalFamily::on_path: eta must be positive");
  return ExtremalFamily(mu, p, 1.0 + (p.p() - 1.0) * eta, eta - 1.0);
}

double ExtremalFamily::C() const { return std::exp(log_c_); }
double ExtremalFamily::C_tilde() const { return std::exp(log_c_tilde_); }

double ExtremalFamily::phi(double t) const {
  return C() * std::pow(t, theta_ / p_.p()) * std::pow(1.0 - t, theta_tilde_ / p_.p());
}

double ExtremalFamily::psi(double s) const {
  return C_tilde() * std::pow(1.0 - s, vartheta_tilde() * p_.inv_q());
}

double bilinear_form_closed(const OperatorParams& params, const ExtremalFamily& fam) {
  if (params.mu() != fam.mu()) throw DomainError("bilinear_form_closed: mu of the family and the operator differ");
  const double p = fam.p().p();
  const double tp = fam.theta() / p;
  const double ttp = fam.theta_tilde() / p;
  const double sum = tp + ttp;
  const double mu = params.mu();
  const double log_value = std::log(mu) + fam.log_C() + fam.log_C_tilde() + log_gamma(mu + 1.0) + log_gamma(tp) +
                           log_gamma(ttp + params.sigma() + 1.0) + log_gamma(sum) -
                           2.0 * log_gamma(sum + params.lambda());
  return std::exp(log_value);
}

double bilinear_form_numeric(const OperatorParams& params, const ExtremalFamily& fam, int panel_order) {
  if (params.mu() != fam.mu()) throw DomainError("bilinear_form_numeric: mu of the family and the operator differ");
  const double p = fam.p().p();
  const double mu = params.mu();
  const double sigma = params.sigma();
  const double a_t = mu - 1.0 + fam.theta() / p;
  const double b_t = sigma + fam.theta_tilde() / p;
  const double b_s = fam.vartheta_tilde() * fam.p().inv_q();

  // Near t = 1 the outer integrand behaves like (1-t)^(e-1); nodes closer
  // than u_min are dropped, which loses about u_min^e / e.
  const double e = std::min((fam.theta() + fam.theta_tilde()) / p, b_t + 1.0);
  const double log10_u_min = std::log10(kTailTolerance * e) / e;
  // Kernel ~ u^-(sigma+1), inner weight ~ u^min(b_s, 0).
  if (-log10_u_min * (sigma + 1.0 + std::max(0.0, -b_s)) > kMaxLog10Kernel) {
    throw ConvergenceError("bilinear_form_numeric: theta~ = " + std::to_string(fam.theta_tilde()) +
                           " too close to -1 to resolve the t -> 1 tail in double precision");
  }
  const double u_min = std::pow(10.0, log10_u_min);

  const GradedJacobiRule inner(mu - 1.0, b_s, panel_order);
  auto outer = [&](double t, double u) {
    const double g = inner.integrate(
        [&](double s, double v) { return kernel_hypergeometric(params, s, v, t, u); }, singularity_scale(t, u));
    return std::pow(t, a_t) * std::pow(u, b_t) * g;
  };
  const auto res = integrate_tanh_sinh(outer, 1e-12, std::min(u_min, 1e-20), 10);
  if (!res.converged) {
    throw ConvergenceError("bilinear_form_numeric: outer quadrature did not converge (estimate " +
                           std::to_string(res.error_estimate) + ")");
  }
  return mu * mu * fam.C() * fam.C_tilde() * res.value;
}

std::vector<SweepPoint> lower_bound_sweep(const OperatorParams& params, const LebesgueExponent& p,
                                          const std::vector<double>& etas) {
  require_open_p(p, "lower_bound_sweep");
  const double norm = norm_formula(params, p);
  std::vector<SweepPoint> out;
  out.reserve(etas.size());
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (!(etas[i] > 0.0) || (i > 0 && !(etas[i] < etas[i - 1]))) {
      throw DomainError("lower_bound_sweep: eta values must be positive and strictly decreasing");
    }
    const auto fam = ExtremalFamily::on_path(params.mu(), p, etas[i]);
    const double value = bilinear_form_closed(params, fam);
    out.push_back({etas[i], value, value / norm});
  }
  return out;
}

double path_gamma_ratio(double p, double eta) {
  if (!(p > 1.0) || !(eta > 0.0)) throw DomainError("path_gamma_ratio: requires p > 1 and eta > 0");
  const double zeta = (p - 1.0) * eta;
  return std::exp(-log_gamma(eta) / p + log_gamma((zeta + eta) / p) - (1.0 - 1.0 / p) * log_gamma(zeta / (p - 1.0)));
}

// ---------------------------------------------------------------------------

bool NormReport::sandwich_holds(double tol) const {
  const double cap = closed_form * (1.0 + tol);
  auto below = [cap](double v) { return std::isnan(v) || v <= cap; };
  return below(schur_max_ratio_right) && below(schur_max_ratio_left) && below(sweep_best_lower) &&
         below(nystrom_estimate);
}

NormReport norm_report(const OperatorParams& params, const LebesgueExponent& p, const NormReportConfig& cfg) {
  NormReport rep{params, p};
  rep.closed_form = norm_formula(params, p);
  rep.blowup_regime = params.sigma() - (1.0 / p.p() - 1.0) < kBlowupMargin;

  if (p.p() == 1.0) {
    rep.schur_max_ratio_right = kNaN;
    rep.schur_max_ratio_left = kNaN;
    rep.sweep_best_lower = kNaN;
    rep.rel_gap_lower = kNaN;
    rep.nystrom_estimate = l1_norm_numeric(params, cfg.grid_size).value;
  } else {
    const auto schur = schur_check(params, p, cfg.grid_size);
    rep.schur_max_ratio_right = schur.max_ratio_right;
    rep.schur_max_ratio_left = schur.max_ratio_left;

    std::vector<double> etas;
    for (double eta = 0.1; eta >= cfg.eta_min * (1.0 - 1e-9); eta /= 10.0) etas.push_back(eta);
    if (etas.empty()) etas.push_back(cfg.eta_min);
    double best = 0.0;
    for (const auto& pt : lower_bound_sweep(params, p, etas)) best = std::max(best, pt.value);
    rep.sweep_best_lower = best;
    rep.rel_gap_lower = (rep.closed_form - best) / rep.closed_form;

    rep.nystrom_estimate = lp_opnorm_numeric(discretize(params, p, cfg.order), cfg.seed).value;
  }
  rep.rel_gap_nystrom = (rep.closed_form - rep.nystrom_estimate) / rep.closed_form;
  return rep;
}

}  // namespace hypnorm
