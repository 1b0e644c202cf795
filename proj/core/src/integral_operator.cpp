#include "hypnorm/integral_operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "hypnorm/specfun.hpp"

namespace hypnorm {

OperatorParams::OperatorParams(double mu, double sigma) : mu_(mu), sigma_(sigma) {
  if (!(mu > 0.0)) throw DomainError("OperatorParams: mu must be positive, got " + std::to_string(mu));
  if (!(sigma > -1.0)) {
    throw DomainError("OperatorParams: sigma must exceed -1, got " + std::to_string(sigma));
  }
}

LebesgueExponent::LebesgueExponent(double p) : p_(p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw DomainError("LebesgueExponent: p must lie in [1, inf), got " + std::to_string(p));
  }
}

double kernel_hypergeometric(const OperatorParams& params, double s, double one_minus_s, double t,
                             double one_minus_t) {
  const double lam = params.lambda();
  const double z = s * t;
  if (z <= 0.5) return hyp2f1(lam, lam, params.mu(), z);
  // 1 - s t = (1-s) + (1-t) - (1-s)(1-t)
  const double w = one_minus_s + one_minus_t - one_minus_s * one_minus_t;
  return hyp2f1_complement(lam, lam, params.mu(), w);
}

double kernel_eval(const OperatorParams& params, double s, double t) {
  if (!(s >= 0.0 && s < 1.0) || !(t >= 0.0 && t < 1.0)) {
    throw DomainError("kernel_eval: s and t must lie in [0, 1)");
  }
  return std::pow(1.0 - t, params.sigma()) * kernel_hypergeometric(params, s, 1.0 - s, t, 1.0 - t);
}

double apply(const OperatorParams& params, const Profile& phi, double s, int rule_order) {
  const auto rule = make_jacobi_rule(params.mu() - 1.0, params.sigma() + phi.endpoint_power, rule_order);
  double sum = 0.0;
  for (int j = 0; j < rule.order; ++j) {
    sum += rule.weights[j] * kernel_hypergeometric(params, s, 1.0 - s, rule.nodes[j], rule.complements[j]) *
           phi.smooth(rule.nodes[j]);
  }
  return params.mu() * sum;
}

DiscretizedOperator discretize(const OperatorParams& params, const LebesgueExponent& p, int order) {
  if (order < 2) throw DomainError("discretize: order must be at least 2");
  auto rule = make_jacobi_rule(params.mu() - 1.0, params.sigma(), order);
  const double mu = params.mu();

  Eigen::MatrixXd matrix(order, order);
  auto fill_rows = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      for (int j = 0; j < order; ++j) {
        matrix(i, j) = mu * rule.weights[j] *
                       kernel_hypergeometric(params, rule.nodes[i], rule.complements[i], rule.nodes[j],
                                             rule.complements[j]);
      }
    }
  };
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, order / 16 + 1);
  {
    std::vector<std::jthread> pool;
    const int chunk = (order + workers - 1) / workers;
    for (int begin = 0; begin < order; begin += chunk) {
      pool.emplace_back(fill_rows, begin, std::min(order, begin + chunk));
    }
  }

  Eigen::VectorXd measure(order);
  for (int i = 0; i < order; ++i) {
    measure(i) = mu * rule.weights[i] * std::pow(rule.complements[i], -params.sigma());
  }
  return {params, p, std::move(rule), std::move(matrix), std::move(measure)};
}

bool is_bounded(const OperatorParams& params, const LebesgueExponent& p) {
  return params.sigma() > 1.0 / p.p() - 1.0;
}

double norm_formula(const OperatorParams& params, const LebesgueExponent& p) {
  if (!is_bounded(params, p)) {
    throw UnboundedOperatorError("norm_formula: F_sigma is unbounded on L^p_mu for sigma <= 1/p - 1 (sigma=" +
                                 std::to_string(params.sigma()) + ", p=" + std::to_string(p.p()) + ")");
  }
  const double inv_p = 1.0 / p.p();
  return std::exp(log_gamma(params.mu() + 1.0) - 2.0 * log_gamma(params.lambda()) + log_gamma(inv_p) +
                  log_gamma(params.sigma() + 1.0 - inv_p));
}

}  // namespace hypnorm
