// Weighted matrix p-norms. With M = diag(measure), ||A||_{p,m} equals the
// plain p-norm of B = M^(1/p) A M^(-1/p), which is what the iteration below
// works on.

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "hypnorm/normest.hpp"

namespace hypnorm {

namespace {

double lp_norm(const Eigen::VectorXd& v, double p) {
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return scale * std::pow((v.cwiseAbs() / scale).array().pow(p).sum(), 1.0 / p);
}

// The vector of unit r'-norm attaining <dual, v> = ||v||_r.
Eigen::VectorXd dual_vector(const Eigen::VectorXd& v, double r) {
  const double norm = lp_norm(v, r);
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double x = v(i) / norm;
    out(i) = std::copysign(std::pow(std::abs(x), r - 1.0), x);
  }
  return out;
}

struct RunResult {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

RunResult power_run(const Eigen::MatrixXd& b, double p, Eigen::VectorXd x) {
  const double q = p / (p - 1.0);
  x /= lp_norm(x, p);
  RunResult res;
  double previous = 0.0;
  for (int it = 1; it <= kPowerMaxIterations; ++it) {
    const Eigen::VectorXd y = b * x;
    const double est = lp_norm(y, p);
    res.value = std::max(res.value, est);
    res.iterations = it;
    if (est == 0.0) {
      res.converged = true;
      return res;
    }
    const Eigen::VectorXd z = b.transpose() * dual_vector(y, p);
    // Stationary point of the duality iteration.
    if (lp_norm(z, q) <= z.dot(x)) {
      res.converged = true;
      return res;
    }
    if (it > 1 && std::abs(est - previous) <= kPowerStagnation * est) {
      res.converged = true;
      return res;
    }
    previous = est;
    x = dual_vector(z, q);
  }
  return res;
}

}  // namespace

PNormEstimate weighted_pnorm_power(const Eigen::MatrixXd& a, const Eigen::VectorXd& measure, double p,
                                   std::uint64_t seed, int restarts) {
  if (!(p > 1.0) || std::isinf(p)) throw DomainError("weighted_pnorm_power: requires 1 < p < inf");
  if (a.rows() != a.cols() || a.rows() != measure.size() || a.rows() == 0) {
    throw DomainError("weighted_pnorm_power: matrix and measure sizes disagree");
  }
  if ((measure.array() <= 0.0).any()) throw DomainError("weighted_pnorm_power: measure must be positive");
  if (restarts < 1) throw DomainError("weighted_pnorm_power: need at least one restart");

  const Eigen::ArrayXd left = measure.array().pow(1.0 / p);
  const Eigen::MatrixXd b = left.matrix().asDiagonal() * a * left.inverse().matrix().asDiagonal();

  std::vector<Eigen::VectorXd> starts;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  for (int r = 0; r < restarts; ++r) {
    Eigen::VectorXd x(a.rows());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = dist(rng);
    starts.push_back(std::move(x));
  }

  std::vector<std::future<RunResult>> runs;
  for (auto& x : starts) runs.push_back(std::async(std::launch::async, power_run, std::cref(b), p, x));

  PNormEstimate out;
  out.restarts = restarts;
  bool any_converged = false;
  for (auto& f : runs) {
    const RunResult r = f.get();
    any_converged = any_converged || r.converged;
    if (r.value > out.value) {
      out.value = r.value;
      out.iterations = r.iterations;
      out.converged = r.converged;
    }
  }
  out.converged = out.converged || any_converged;
  return out;
}

double weighted_l2_norm_svd(const Eigen::MatrixXd& a, const Eigen::VectorXd& measure) {
  if (a.rows() != a.cols() || a.rows() != measure.size()) {
    throw DomainError("weighted_l2_norm_svd: matrix and measure sizes disagree");
  }
  const Eigen::ArrayXd d = measure.array().sqrt();
  const Eigen::MatrixXd b = d.matrix().asDiagonal() * a * d.inverse().matrix().asDiagonal();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(b);
  return svd.singularValues()(0);
}

PNormEstimate lp_opnorm_numeric(const DiscretizedOperator& disc, std::uint64_t seed) {
  if (!(disc.p.p() > 1.0)) throw DomainError("lp_opnorm_numeric: requires 1 < p < inf");
  return weighted_pnorm_power(disc.matrix, disc.measure, disc.p.p(), seed);
}

double l2_opnorm_svd(const DiscretizedOperator& disc) {
  if (disc.p.p() != 2.0) throw DomainError("l2_opnorm_svd: only defined for p = 2");
  return weighted_l2_norm_svd(disc.matrix, disc.measure);
}

}  // namespace hypnorm
