#include "hypnorm/ball.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hypnorm/quadrature.hpp"
#include "hypnorm/specfun.hpp"

namespace hypnorm {

namespace {

double conjugate(double p) { return std::isinf(p) ? 1.0 : p / (p - 1.0); }

void check_n(int n, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": dimension n must be at least 1");
}

// Polar quadrature on the disc: s = |w|^2 from `rule`, angle by the trapezoid
// rule, dv = ds dtheta / (2 pi). kernel(w) multiplies f(w).
template <class Kernel>
double disc_quadrature(const JacobiRule& rule, int angular_order, const DiscFunction& f, Kernel&& kernel) {
  const double step = 2.0 * std::numbers::pi / angular_order;
  double total = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double r = std::sqrt(rule.nodes[i]);
    double ring = 0.0;
    for (int k = 0; k < angular_order; ++k) {
      const auto w = std::polar(r, k * step);
      ring += kernel(w) * f(w);
    }
    total += rule.weights[i] * ring / angular_order;
  }
  return total;
}

void check_disc_point(std::complex<double> z, int radial_order, int angular_order, const char* who) {
  if (radial_order < 1 || angular_order < 1) throw DomainError(std::string(who) + ": quadrature orders must be positive");
  if (!(std::abs(z) <= kDiscMaxRadius)) {
    throw ConvergenceError(std::string(who) + ": |z| = " + std::to_string(std::abs(z)) +
                           " exceeds 0.95; the kernel is too concentrated for the polar rule");
  }
}

}  // namespace

BallParams::BallParams(int n, double sigma) : n_(n), sigma_(sigma) {
  check_n(n, "BallParams");
  if (!(sigma > -1.0)) throw DomainError("BallParams: sigma must exceed -1, got " + std::to_string(sigma));
}

double c_sigma(int n, double sigma) {
  check_n(n, "c_sigma");
  if (!(sigma > -1.0)) throw DomainError("c_sigma: sigma must exceed -1, got " + std::to_string(sigma));
  return std::exp(log_gamma(n + sigma + 1.0) - log_gamma(sigma + 1.0) - log_gamma(n + 1.0));
}

double i_c(int n, double c, double r2) {
  check_n(n, "i_c");
  if (!(r2 >= 0.0 && r2 < 1.0)) throw DomainError("i_c: |z|^2 must lie in [0, 1)");
  const double a = 0.5 * (n + c);
  return hyp2f1(a, a, static_cast<double>(n), r2);
}

double radial_apply(const BallParams& bp, const Profile& h, double r2, int order) {
  return c_sigma(bp.n(), bp.sigma()) * apply(bp.interval(), h, r2, order);
}

double tilde_norm_formula(const BallParams& bp, double p) {
  const LebesgueExponent lp(p);
  if (!is_bounded(bp.interval(), lp)) {
    throw UnboundedOperatorError("tilde_norm_formula: T~_sigma is unbounded on L^p for sigma <= 1/p - 1");
  }
  const double inv_p = 1.0 / p;
  return std::exp(log_gamma(bp.n() + bp.sigma() + 1.0) - 2.0 * log_gamma(bp.lambda()) -
                  log_gamma(bp.sigma() + 1.0) + log_gamma(inv_p) + log_gamma(bp.sigma() + 1.0 - inv_p));
}

double conj_tilde_norm_formula(const BallParams& bp, double p) {
  if (!(p > 1.0)) throw DomainError("conj_tilde_norm_formula: p must lie in (1, inf]");
  const double q = conjugate(p);
  if (!(bp.sigma() > 1.0 / q - 1.0)) {
    throw DomainError("conj_tilde_norm_formula: requires sigma > 1/q - 1");
  }
  return tilde_norm_formula(bp, q);
}

BergmanExactNorms bergman_exact_norms(const BallParams& bp) {
  BergmanExactNorms out;
  const double s = bp.sigma();
  if (s > 0.0) {
    out.l1 = std::exp(log_gamma(s) - log_gamma(s + 1.0) + log_gamma(2.0 * bp.lambda()) -
                      2.0 * log_gamma(bp.lambda()));
  }
  if (s > -0.5) out.l2 = std::exp(0.5 * log_gamma(2.0 * s + 1.0) - log_gamma(s + 1.0));
  return out;
}

double riesz_thorin_bound(const BallParams& bp, double p) {
  if (!(bp.sigma() > 0.0)) throw DomainError("riesz_thorin_bound: requires sigma > 0");
  if (!(p >= 1.0 && p <= 2.0)) throw DomainError("riesz_thorin_bound: requires 1 <= p <= 2");
  const auto exact = bergman_exact_norms(bp);
  return std::exp((2.0 / p - 1.0) * std::log(*exact.l1) + (2.0 - 2.0 / p) * std::log(*exact.l2));
}

double bergman_upper_bound(const BallParams& bp, double p) {
  try {
    return tilde_norm_formula(bp, p);
  } catch (const UnboundedOperatorError& e) {
    throw DomainError(std::string("bergman_upper_bound: ") + e.what());
  }
}

BlochConstants bloch_constants(const BallParams& bp) {
  const double lam = bp.lambda();
  const double beta = std::exp(log_gamma(2.0 * lam + 1.0) - 2.0 * log_gamma(lam + 0.5));
  return {beta, 1.0 + beta};
}

double berezin_norm(int n, double p) {
  check_n(n, "berezin_norm");
  if (!(p > 1.0)) throw DomainError("berezin_norm: p must exceed 1 (the norm diverges as p -> 1)");
  if (std::isinf(p)) return 1.0;
  double prod = 1.0;
  for (int k = 1; k <= n; ++k) prod *= 1.0 + 1.0 / (k * p);
  const double x = std::numbers::pi / p;
  return prod * x / std::sin(x);
}

double berezin_l2_doublefactorial(int n) {
  check_n(n, "berezin_l2_doublefactorial");
  // (2n+1)!! / (2n)!! with (2n)!! = 2^n n!
  const double log_ratio = (n + 1) * std::numbers::ln2 + log_gamma(n + 1.5) - 0.5 * std::log(std::numbers::pi) -
                           n * std::numbers::ln2 - log_gamma(n + 1.0);
  return std::exp(log_ratio) * 0.5 * std::numbers::pi;
}

double berezin_asymptotic_p_to_1(int n, double p) {
  check_n(n, "berezin_asymptotic_p_to_1");
  if (!(p > 1.0 && p < 1.2)) throw DomainError("berezin_asymptotic_p_to_1: requires 1 < p < 1.2");
  return (n + 1.0) / (p - 1.0);
}

double berezin_apply_disc(const DiscFunction& f, std::complex<double> z, int radial_order, int angular_order) {
  check_disc_point(z, radial_order, angular_order, "berezin_apply_disc");
  const auto rule = make_jacobi_rule(0.0, 0.0, radial_order);
  const double factor = std::pow(1.0 - std::norm(z), 2);
  return factor * disc_quadrature(rule, angular_order, f, [&](std::complex<double> w) {
           const double d = std::norm(1.0 - z * std::conj(w));
           return 1.0 / (d * d);
         });
}

double tilde_apply_disc(double sigma, const DiscFunction& f, std::complex<double> z, int radial_order,
                        int angular_order) {
  check_disc_point(z, radial_order, angular_order, "tilde_apply_disc");
  const BallParams bp(1, sigma);
  const auto rule = make_jacobi_rule(0.0, sigma, radial_order);
  const double lam = bp.lambda();
  return c_sigma(1, sigma) * disc_quadrature(rule, angular_order, f, [&](std::complex<double> w) {
           return std::pow(std::norm(1.0 - z * std::conj(w)), -lam);
         });
}

RadialBerezinMatrix radial_berezin_matrix(int n, int order) {
  check_n(n, "radial_berezin_matrix");
  if (order < 2) throw DomainError("radial_berezin_matrix: order must be at least 2");
  const auto rule = make_jacobi_rule(n - 1.0, 0.0, order);
  const double a = n + 1.0;
  RadialBerezinMatrix out{Eigen::MatrixXd(order, order), Eigen::VectorXd(order)};
  for (int i = 0; i < order; ++i) {
    const double x = rule.nodes[i];
    const double ux = rule.complements[i];
    const double front = std::pow(ux, a) * n;
    for (int j = 0; j < order; ++j) {
      const double s = rule.nodes[j];
      const double us = rule.complements[j];
      const double z = x * s;
      const double f = z <= 0.5 ? hyp2f1(a, a, n, z) : hyp2f1_complement(a, a, n, ux + us - ux * us);
      out.matrix(i, j) = front * rule.weights[j] * f;
    }
    out.measure(i) = n * rule.weights[i];
  }
  return out;
}

}  // namespace hypnorm
