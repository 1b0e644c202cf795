#pragma once

// The hypergeometric integral operator on L^p_mu(0,1),
//
//   F_sigma phi(s) = mu * int_0^1 (1-t)^sigma 2F1(lambda,lambda;mu;s t) phi(t) t^(mu-1) dt,
//
// with lambda = (mu + sigma + 1)/2: kernel evaluation, application by
// quadrature, Nystrom discretization and the closed-form operator norm.

#include <functional>
#include <limits>

#include <Eigen/Dense>

#include "hypnorm/errors.hpp"
#include "hypnorm/quadrature.hpp"

namespace hypnorm {

// (mu, sigma) with the derived lambda = (mu + sigma + 1) / 2.
class OperatorParams {
 public:
  // DomainError unless mu > 0 and sigma > -1.
  OperatorParams(double mu, double sigma);

  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double lambda() const { return 0.5 * (mu_ + sigma_ + 1.0); }

 private:
  double mu_;
  double sigma_;
};

// Lebesgue exponent p in [1, inf) with its conjugate q (q = inf for p = 1).
class LebesgueExponent {
 public:
  explicit LebesgueExponent(double p);

  double p() const { return p_; }
  double q() const {
    return p_ == 1.0 ? std::numeric_limits<double>::infinity() : p_ / (p_ - 1.0);
  }
  // 1/q, exact zero for p = 1.
  double inv_q() const { return 1.0 - 1.0 / p_; }

 private:
  double p_;
};

// phi(t) = smooth(t) * (1-t)^endpoint_power. The power is folded into the
// quadrature weight rather than sampled.
struct Profile {
  std::function<double(double)> smooth = [](double) { return 1.0; };
  double endpoint_power = 0.0;

  static Profile constant(double c = 1.0) {
    return {[c](double) { return c; }, 0.0};
  }
  static Profile power(double exponent) {
    return {[](double) { return 1.0; }, exponent};
  }
};

/// (1-t)^sigma 2F1(lambda, lambda; mu; s t) for s, t in [0, 1).
double kernel_eval(const OperatorParams& params, double s, double t);

/// 2F1(lambda, lambda; mu; s t) given s, t and their complements, keeping
/// 1 - s t accurate when both points crowd t = 1.
double kernel_hypergeometric(const OperatorParams& params, double s, double one_minus_s, double t,
                             double one_minus_t);

/// F_sigma phi at s by Gauss-Jacobi quadrature with alpha = mu - 1 and
/// beta = sigma + phi.endpoint_power.
double apply(const OperatorParams& params, const Profile& phi, double s,
             int rule_order = kDefaultRuleOrder);

// Nystrom matrix of F_sigma on the nodes of one Jacobi rule
// (alpha = mu - 1, beta = sigma): matrix(i, j) = mu w_j 2F1(lambda,lambda;mu;s_i t_j),
// the factor (1-t_j)^sigma being carried by w_j.
//
// measure(i) = mu w_i (1-t_i)^(-sigma) is the quadrature of d mu, so the
// discrete norm is ||x||_{p} = (sum measure_i |x_i|^p)^(1/p).
struct DiscretizedOperator {
  OperatorParams params;
  LebesgueExponent p;
  JacobiRule rule;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd measure;
};

/// DomainError for order < 2. Rows are assembled in parallel.
DiscretizedOperator discretize(const OperatorParams& params, const LebesgueExponent& p, int order);

/// Gamma(mu+1)/Gamma(lambda)^2 * Gamma(1/p) Gamma(sigma + 1 - 1/p).
/// UnboundedOperatorError when sigma <= 1/p - 1.
double norm_formula(const OperatorParams& params, const LebesgueExponent& p);

/// True iff F_sigma is bounded on L^p_mu, i.e. sigma > 1/p - 1.
bool is_bounded(const OperatorParams& params, const LebesgueExponent& p);

}  // namespace hypnorm
