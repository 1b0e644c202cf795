#pragma once

// Independent numerical routes to the operator norm of F_sigma on L^p_mu(0,1):
//   * the L^1 column supremum,
//   * the Schur test with the power test function (1-t)^(-1/(pq)) (upper bound),
//   * the extremal family Phi = C t^(theta/p) (1-t)^(theta~/p),
//     Psi = C~ (1-s)^(vartheta~/q) along theta~ + 1 = (theta - 1)/(p - 1) (lower bound),
//   * the weighted p-norm of the Nystrom matrix (power method, SVD for p = 2).

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hypnorm/integral_operator.hpp"
#include "hypnorm/specfun.hpp"

namespace hypnorm {

// x in (0,1) together with 1 - x.
struct GridPoint {
  double x;
  double complement;
};

/// Supremum grid: `chebyshev_points` Chebyshev-spaced points in (0,1) plus
/// 1 - 2^-k for k = 1..40, sorted ascending.
std::vector<GridPoint> supremum_grid(int chebyshev_points);

inline constexpr int kRefinementLevels = 40;

// ---------------------------------------------------------------------------
// L^1 route

struct L1Estimate {
  Growth growth = Growth::bounded;
  // sup_t int K(s,t) d mu(s): max of the grid supremum and the t -> 1 limit;
  // +inf when the column integrals are unbounded.
  double value = 0.0;
  double grid_sup = 0.0;
  double argmax = 0.0;
  double endpoint = 0.0;     // Gauss value of the t -> 1 limit (bounded case)
  double coefficient = 0.0;  // leading coefficient of the divergence
  double exponent = 0.0;     // power-law exponent of the divergence

  bool bounded() const { return growth == Growth::bounded; }
};

/// Column integral  int_0^1 K_sigma(s,t) d mu(s)  by graded quadrature.
double l1_column_integral(const OperatorParams& params, double t, double one_minus_t, int panel_order = 24);

L1Estimate l1_norm_numeric(const OperatorParams& params, int grid_size = 32);

// ---------------------------------------------------------------------------
// Schur test

struct SchurCheck {
  double bound = 0.0;            // closed-form norm
  double max_ratio_right = 0.0;  // sup_s int K(s,t) phi(t)^q d mu(t) / phi(s)^q
  double max_ratio_left = 0.0;   // sup_t int K(s,t) phi(s)^p d mu(s) / phi(t)^p
  double end_ratio_right = 0.0;  // value at the most refined grid point 1 - 2^-40
  double end_ratio_left = 0.0;
};

/// Right ratio at s: (1-s)^(1/p) mu int t^(mu-1) (1-t)^(sigma-1/p) 2F1(..;s t) dt.
double schur_ratio_right(const OperatorParams& params, const LebesgueExponent& p, double s, double one_minus_s,
                         int panel_order = 24);
/// Left ratio at t: (1-t)^(sigma+1/q) mu int s^(mu-1) (1-s)^(-1/q) 2F1(..;s t) ds.
double schur_ratio_left(const OperatorParams& params, const LebesgueExponent& p, double t, double one_minus_t,
                        int panel_order = 24);

/// DomainError unless 1 < p < inf; UnboundedOperatorError when sigma <= 1/p - 1.
SchurCheck schur_check(const OperatorParams& params, const LebesgueExponent& p, int grid_size = 32);

// ---------------------------------------------------------------------------
// Extremal family

class ExtremalFamily {
 public:
  /// vartheta = 0 and vartheta~ = (theta - p)/(p - 1). DomainError unless
  /// p > 1, theta > 1 and theta~ > -1.
  ExtremalFamily(double mu, const LebesgueExponent& p, double theta, double theta_tilde);

  /// Point eta > 0 on the path theta = 1 + (p-1) eta, theta~ = eta - 1.
  static ExtremalFamily on_path(double mu, const LebesgueExponent& p, double eta);

  const LebesgueExponent& p() const { return p_; }
  double mu() const { return mu_; }
  double theta() const { return theta_; }
  double theta_tilde() const { return theta_tilde_; }
  double vartheta() const { return 0.0; }
  double vartheta_tilde() const { return (theta_ - p_.p()) / (p_.p() - 1.0); }
  double log_C() const { return log_c_; }
  double log_C_tilde() const { return log_c_tilde_; }
  double C() const;
  double C_tilde() const;

  double phi(double t) const;  // C t^(theta/p) (1-t)^(theta~/p)
  double psi(double s) const;  // C~ (1-s)^(vartheta~/q)

 private:
  double mu_;
  LebesgueExponent p_;
  double theta_;
  double theta_tilde_;
  double log_c_;
  double log_c_tilde_;
};

/// int F_sigma Phi(s) Psi(s) d mu(s) in closed form:
///   mu C C~ Gamma(mu+1) Gamma(theta/p) Gamma(theta~/p + sigma + 1) Gamma((theta+theta~)/p)
///     / Gamma((theta+theta~)/p + lambda)^2.
double bilinear_form_closed(const OperatorParams& params, const ExtremalFamily& fam);

/// The same pairing as a double integral: outer tanh-sinh in t, inner graded
/// Gauss-Jacobi in s, both power factors carried by the weights. Throws
/// ConvergenceError when the t -> 1 tail cannot be resolved in double range
/// (theta~ too close to -1).
double bilinear_form_numeric(const OperatorParams& params, const ExtremalFamily& fam, int panel_order = 24);

struct SweepPoint {
  double eta = 0.0;
  double value = 0.0;
  double ratio = 0.0;  // value / norm_formula
};

/// bilinear_form_closed along the path for each eta (strictly decreasing, positive).
std::vector<SweepPoint> lower_bound_sweep(const OperatorParams& params, const LebesgueExponent& p,
                                          const std::vector<double>& etas);

/// G(eta)^(-1/p) G((zeta+eta)/p) / G(zeta/(p-1))^(1-1/p) with G = Gamma and
/// zeta = (p-1) eta; identically 1 along the path.
double path_gamma_ratio(double p, double eta);

// ---------------------------------------------------------------------------
// Discrete p-norm

struct PNormEstimate {
  double value = 0.0;
  int iterations = 0;  // of the best restart
  int restarts = 0;
  bool converged = false;
};

inline constexpr int kPowerMaxIterations = 10000;
inline constexpr double kPowerStagnation = 1e-10;
inline constexpr int kPowerRestarts = 5;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// max ||A x||_{p,m} / ||x||_{p,m} over x by the alternating duality-map
/// iteration, ||x||_{p,m} = (sum m_i |x_i|^p)^(1/p). Restarts from positive
/// random vectors (fixed seed) run concurrently; the best quotient wins.
PNormEstimate weighted_pnorm_power(const Eigen::MatrixXd& a, const Eigen::VectorXd& measure, double p,
                                   std::uint64_t seed = kDefaultSeed, int restarts = kPowerRestarts);

/// ||A||_{2,m}: largest singular value of M^(1/2) A M^(-1/2).
double weighted_l2_norm_svd(const Eigen::MatrixXd& a, const Eigen::VectorXd& measure);

/// Power-method estimate for the discretized operator, p in (1, inf).
PNormEstimate lp_opnorm_numeric(const DiscretizedOperator& disc, std::uint64_t seed = kDefaultSeed);

/// Singular-value route, p = 2 only.
double l2_opnorm_svd(const DiscretizedOperator& disc);

// ---------------------------------------------------------------------------

struct NormReportConfig {
  int order = 256;       // Nystrom order
  int grid_size = 32;    // Chebyshev points of the supremum grids
  double eta_min = 1e-6;
  std::uint64_t seed = kDefaultSeed;
};

// sigma - (1/p - 1) below this is reported as the blow-up regime.
inline constexpr double kBlowupMargin = 0.1;

struct NormReport {
  OperatorParams params;
  LebesgueExponent p;
  double closed_form = 0.0;
  double schur_max_ratio_right = 0.0;  // NaN for p = 1
  double schur_max_ratio_left = 0.0;   // NaN for p = 1
  double sweep_best_lower = 0.0;       // NaN for p = 1
  double nystrom_estimate = 0.0;       // L^1 supremum route for p = 1
  double rel_gap_lower = 0.0;
  double rel_gap_nystrom = 0.0;
  bool blowup_regime = false;

  /// Every route stays below closed_form * (1 + tol).
  bool sandwich_holds(double tol = 1e-6) const;
};

NormReport norm_report(const OperatorParams& params, const LebesgueExponent& p, const NormReportConfig& cfg = {});

}  // namespace hypnorm
