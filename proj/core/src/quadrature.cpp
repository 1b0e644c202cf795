#include "hypnorm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hypnorm/specfun.hpp"

namespace hypnorm {

namespace {

constexpr int kMaxSweeps = 30;

}  // namespace

TridiagonalEigen tridiagonal_eigen(std::vector<double> d, std::vector<double> offdiag) {
  const int n = static_cast<int>(d.size());
  if (static_cast<int>(offdiag.size()) + 1 != n && !(n == 0 && offdiag.empty())) {
    throw DomainError("tridiagonal_eigen: offdiag must have size n - 1");
  }
  std::vector<double> e(n, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());
  std::vector<double> z(n, 0.0);  // first row of the eigenvector matrix
  if (n > 0) z[0] = 1.0;

  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxSweeps) {
          throw ConvergenceError("tridiagonal_eigen: no convergence after " + std::to_string(kMaxSweeps) +
                                 " QL sweeps");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          e[i + 1] = (r = std::hypot(f, g));
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          d[i + 1] = g + (p = s * r);
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  TridiagonalEigen out;
  out.values.reserve(n);
  out.first_components_sq.reserve(n);
  for (int k : order) {
    out.values.push_back(d[k]);
    out.first_components_sq.push_back(z[k] * z[k]);
  }
  return out;
}

JacobiRule make_jacobi_rule(double alpha, double beta, int order) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("make_jacobi_rule: exponents must exceed -1 (alpha=" + std::to_string(alpha) +
                      ", beta=" + std::to_string(beta) + ")");
  }
  if (order < 1) throw DomainError("make_jacobi_rule: order must be positive");

  // Recurrence of the monic Jacobi polynomials on [-1,1] for the weight
  // (1-x)^a (1+x)^b, mapped to t = (1+x)/2: a = beta, b = alpha.
  const double a = beta;
  const double b = alpha;
  std::vector<double> diag(order);
  std::vector<double> off(order > 0 ? order - 1 : 0);
  for (int n = 0; n < order; ++n) {
    double an;
    if (n == 0) {
      an = (b - a) / (a + b + 2.0);
    } else {
      const double s = 2.0 * n + a + b;
      an = (b * b - a * a) / (s * (s + 2.0));
    }
    diag[n] = 0.5 * (1.0 + an);
  }
  for (int n = 1; n < order; ++n) {
    double bn;
    if (n == 1) {
      const double s = 2.0 + a + b;
      bn = 4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0));
    } else {
      const double s = 2.0 * n + a + b;
      bn = 4.0 * n * (n + a) * (n + b) * (n + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off[n - 1] = 0.5 * std::sqrt(bn);
  }

  const auto eig = tridiagonal_eigen(std::move(diag), std::move(off));
  const double mass = beta_fn(alpha + 1.0, beta + 1.0);

  JacobiRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.order = order;
  rule.nodes = eig.values;
  rule.weights.resize(order);
  rule.complements.resize(order);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = std::clamp(rule.nodes[i], std::numeric_limits<double>::min(), 1.0 - 0x1p-53);
    rule.complements[i] = 1.0 - rule.nodes[i];
    rule.weights[i] = mass * eig.first_components_sq[i];
  }
  return rule;
}

double integrate_weighted(const std::function<double(double)>& f, double mu, double sigma, int rule_order) {
  if (!(mu > 0.0)) throw DomainError("integrate_weighted: mu must be positive");
  if (!(sigma > -1.0)) throw DomainError("integrate_weighted: sigma must exceed -1");
  const auto rule = make_jacobi_rule(mu - 1.0, sigma, rule_order);
  return mu * rule.integrate(f);
}

GradedJacobiRule::GradedJacobiRule(double alpha, double beta, int panel_order)
    : alpha_(alpha),
      beta_(beta),
      whole_(make_jacobi_rule(alpha, beta, panel_order)),
      head_(make_jacobi_rule(beta, 0.0, panel_order)),
      middle_(make_jacobi_rule(0.0, 0.0, panel_order)),
      tail_(make_jacobi_rule(alpha, 0.0, panel_order)) {}

TanhSinhResult integrate_tanh_sinh(const std::function<double(double, double)>& f, double rel_tol,
                                   double min_distance, int max_level) {
  constexpr double kHalfPi = 1.5707963267948966;
  // Node at abscissa tau: x = (1 + tanh(y)) / 2 with y = pi/2 sinh(tau). With
  // E = exp(-2|y|) the distance to the nearer endpoint is E / (1 + E) and
  // dx/dtau = pi/2 cosh(tau) * E / (1 + E)^2 * 2.
  auto node = [&](double tau, double& value) -> bool {
    const double y = kHalfPi * std::sinh(tau);
    const double e = std::exp(-2.0 * std::abs(y));
    const double near = e / (1.0 + e);
    if (near < min_distance) return false;
    const double far = 1.0 / (1.0 + e);
    const double weight = 2.0 * kHalfPi * std::cosh(tau) * e / ((1.0 + e) * (1.0 + e));
    const double t = tau >= 0.0 ? far : near;
    const double u = tau >= 0.0 ? near : far;
    value = weight * f(t, u);
    return true;
  };
  // Sum over tau = j h for odd j only (refinement) or all j (level 0).
  auto sweep = [&](double h, int step, int first) {
    double sum = 0.0;
    for (int sign : {1, -1}) {
      for (int j = first;; j += step) {
        if (j == 0 && sign == -1) continue;
        double v;
        if (!node(sign * j * h, v)) break;
        sum += v;
        if (j * h > 7.0) break;
      }
    }
    return sum;
  };

  TanhSinhResult out;
  double h = 1.0;
  double sum = sweep(h, 1, 0);
  double estimate = h * sum;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    sum += sweep(h, 2, 1);
    const double next = h * sum;
    out.error_estimate = std::abs(next - estimate);
    estimate = next;
    out.levels = level;
    if (level >= 3 && out.error_estimate <= rel_tol * std::abs(estimate)) {
      out.converged = true;
      break;
    }
  }
  out.value = estimate;
  return out;
}

}  // namespace hypnorm
