#pragma once

// Gauss-Jacobi rules on (0, 1) for the weight t^alpha (1-t)^beta, plus two
// composite schemes for integrands with endpoint trouble beyond the weight.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "hypnorm/errors.hpp"

namespace hypnorm {

inline constexpr int kDefaultRuleOrder = 64;
inline constexpr int kVerificationRuleOrder = 128;

/// Gauss rule for  integral_0^1 t^alpha (1-t)^beta f(t) dt.
/// Nodes are strictly increasing in (0,1); `complements` holds 1 - node.
struct JacobiRule {
  double alpha = 0.0;
  double beta = 0.0;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> complements;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (int i = 0; i < order; ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Golub-Welsch: eigen-decomposition of the Jacobi matrix of the shifted
/// Jacobi polynomials. DomainError unless alpha, beta > -1 and order >= 1.
JacobiRule make_jacobi_rule(double alpha, double beta, int order);

/// Eigenvalues of the symmetric tridiagonal matrix (diag, offdiag) together
/// with the squared first components of the normalized eigenvectors, using
/// implicit QL with at most 30 sweeps per eigenvalue. Sorted ascending.
struct TridiagonalEigen {
  std::vector<double> values;
  std::vector<double> first_components_sq;
};
TridiagonalEigen tridiagonal_eigen(std::vector<double> diag, std::vector<double> offdiag);

/// mu * sum w_i f(t_i) for the rule with alpha = mu - 1, beta = sigma: the
/// integral of f against (1-t)^sigma d mu(t), d mu(t) = mu t^(mu-1) dt.
double integrate_weighted(const std::function<double(double)>& f, double mu, double sigma,
                          int rule_order = kDefaultRuleOrder);

/// Composite Gauss-Jacobi rule for
///     integral_0^1 t^alpha (1-t)^beta f(t, 1-t) dt
/// where f is smooth on [0,1] except for a singularity at distance `scale`
/// past t = 1. Panels are graded geometrically (ratio 4) towards t = 1 down to
/// the scale of the singularity; the outermost panel absorbs (1-t)^beta and
/// the panel at t = 0 absorbs t^alpha.
class GradedJacobiRule {
 public:
  GradedJacobiRule(double alpha, double beta, int panel_order = 24);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  // f(t, u) receives t and u = 1 - t, both to full relative precision.
  template <class F>
  double integrate(F&& f, double scale) const;

 private:
  double alpha_;
  double beta_;
  JacobiRule whole_;   // t^alpha (1-t)^beta on (0,1); used when scale is large
  JacobiRule head_;    // y^beta on (0,1), scaled into the panel u in (0, scale)
  JacobiRule middle_;  // Gauss-Legendre
  JacobiRule tail_;    // x^alpha on (0,1), scaled into t in (0, 1/2)
};

/// Tanh-sinh (double exponential) quadrature of integral_0^1 f(t, 1-t) dt.
/// Tolerates integrable algebraic singularities of any strength at both
/// endpoints. Nodes closer than `min_distance` to an endpoint are skipped.
struct TanhSinhResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels = 0;
  bool converged = false;
};
TanhSinhResult integrate_tanh_sinh(const std::function<double(double, double)>& f,
                                   double rel_tol = 1e-11, double min_distance = 1e-200,
                                   int max_level = 9);

// ---------------------------------------------------------------------------

template <class F>
double GradedJacobiRule::integrate(F&& f, double scale) const {
  if (!(scale > 0.0)) throw DomainError("GradedJacobiRule: singularity scale must be positive");
  if (scale >= 0.5) {
    double sum = 0.0;
    for (int i = 0; i < whole_.order; ++i) sum += whole_.weights[i] * f(whole_.nodes[i], whole_.complements[i]);
    return sum;
  }
  double total = 0.0;

  // u in (0, scale): u = scale * y, weight u^beta = scale^beta y^beta.
  {
    double sum = 0.0;
    for (int i = 0; i < head_.order; ++i) {
      const double u = scale * head_.nodes[i];
      const double t = 1.0 - u;
      sum += head_.weights[i] * std::pow(t, alpha_) * f(t, u);
    }
    total += std::pow(scale, beta_ + 1.0) * sum;
  }

  // Geometric panels u in (h, 4h) up to u = 1/2.
  for (double lo = scale; lo < 0.5;) {
    const double hi = std::min(4.0 * lo, 0.5);
    const double len = hi - lo;
    double sum = 0.0;
    for (int i = 0; i < middle_.order; ++i) {
      const double u = lo + len * middle_.nodes[i];
      const double t = 1.0 - u;
      sum += middle_.weights[i] * std::pow(t, alpha_) * std::pow(u, beta_) * f(t, u);
    }
    total += len * sum;
    lo = hi;
  }

  // t in (0, 1/2): t = x / 2, weight t^alpha = 2^-alpha x^alpha.
  {
    double sum = 0.0;
    for (int i = 0; i < tail_.order; ++i) {
      const double t = 0.5 * tail_.nodes[i];
      const double u = 1.0 - t;
      sum += tail_.weights[i] * std::pow(u, beta_) * f(t, u);
    }
    total += std::pow(0.5, alpha_ + 1.0) * sum;
  }
  return total;
}

}  // namespace hypnorm
