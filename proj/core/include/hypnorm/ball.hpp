#pragma once

// Unit-ball consequences of the interval norm: the Forelli-Rudin type
// operators T_sigma, T~_sigma and its adjoint on L^p(B_n, dv), the Bloch
// constants, and the Berezin transform. Every norm is reached through the
// radial reduction T~_sigma h(z) = c_sigma F_sigma H(|z|^2) with mu = n.

#include <complex>
#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "hypnorm/integral_operator.hpp"

namespace hypnorm {

class BallParams {
 public:
  // DomainError unless n >= 1 and sigma > -1.
  BallParams(int n, double sigma);

  int n() const { return n_; }
  double sigma() const { return sigma_; }
  double lambda() const { return 0.5 * (n_ + sigma_ + 1.0); }

  // The interval operator with mu = n and the same sigma.
  OperatorParams interval() const { return {static_cast<double>(n_), sigma_}; }

 private:
  int n_;
  double sigma_;
};

/// c_sigma = Gamma(n+sigma+1) / (Gamma(sigma+1) Gamma(n+1)), so that c_sigma (1-|w|^2)^sigma dv
/// is a probability measure.
double c_sigma(int n, double sigma);

/// Sphere average of |1 - <z, zeta>|^-(n+c):  2F1((n+c)/2, (n+c)/2; n; |z|^2).
double i_c(int n, double c, double r2);

/// T~_sigma h(z) for h(w) = H(|w|^2), evaluated at |z|^2 = r2.
double radial_apply(const BallParams& bp, const Profile& h, double r2, int order = kDefaultRuleOrder);

/// ||T~_sigma||_{L^p -> L^p}; UnboundedOperatorError unless sigma > 1/p - 1.
double tilde_norm_formula(const BallParams& bp, double p);

/// ||T~*_sigma||_{L^p} = ||T~_sigma||_{L^q}, p in (1, inf] (q = 1 at p = inf).
double conj_tilde_norm_formula(const BallParams& bp, double p);

struct BergmanExactNorms {
  std::optional<double> l1;  // sigma > 0
  std::optional<double> l2;  // sigma > -1/2
};

/// Exact norms of T_sigma: L^1 -> L^1_a and L^2 -> L^2_a where known.
BergmanExactNorms bergman_exact_norms(const BallParams& bp);

/// Interpolation between the exact L^1 and L^2 values, 1 <= p <= 2, sigma > 0.
double riesz_thorin_bound(const BallParams& bp, double p);

/// ||T_sigma|| <= ||T~_sigma||, i.e. tilde_norm_formula.
double bergman_upper_bound(const BallParams& bp, double p);

struct BlochConstants {
  double beta_norm = 0.0;  // Gamma(2 lambda + 1) / Gamma(lambda + 1/2)^2
  double full_norm = 0.0;  // 1 + beta_norm
};
BlochConstants bloch_constants(const BallParams& bp);

// ---------------------------------------------------------------------------
// Berezin transform

/// prod_{k=1}^n (1 + 1/(k p)) * (pi/p) / sin(pi/p) for 1 < p < inf, exactly 1 at p = inf.
double berezin_norm(int n, double p);

/// (2n+1)!! / (2n)!! * pi/2, with (2n+1)!! = 2^(n+1) Gamma(n+3/2) / sqrt(pi).
double berezin_l2_doublefactorial(int n);

/// (n+1)/(p-1), the p -> 1+ behaviour of berezin_norm; requires 1 < p < 1.2.
double berezin_asymptotic_p_to_1(int n, double p);

using DiscFunction = std::function<double(std::complex<double>)>;

inline constexpr int kDiscRadialOrder = 64;
inline constexpr int kDiscAngularOrder = 512;
inline constexpr double kDiscMaxRadius = 0.95;

/// Berezin transform on the unit disc (n = 1):
///   int_D (1-|z|^2)^2 / |1 - z conj(w)|^4 f(w) dv(w),
/// by Gauss-Legendre in |w|^2 times the trapezoid rule in arg w.
/// ConvergenceError for |z| > 0.95, where the kernel outgrows the rule.
double berezin_apply_disc(const DiscFunction& f, std::complex<double> z, int radial_order = kDiscRadialOrder,
                          int angular_order = kDiscAngularOrder);

/// T~_sigma f(z) on the unit disc by the same polar quadrature, Gauss-Jacobi in
/// |w|^2 carrying (1-|w|^2)^sigma. Independent of the radial reduction.
double tilde_apply_disc(double sigma, const DiscFunction& f, std::complex<double> z,
                        int radial_order = kDiscRadialOrder, int angular_order = kDiscAngularOrder);

/// Nystrom matrix of the Berezin transform restricted to radial functions,
/// B H(x) = (1-x)^(n+1) n int_0^1 2F1(n+1, n+1; n; x s) H(s) s^(n-1) ds,
/// on Gauss-Legendre-Jacobi nodes (alpha = n - 1); measure n w_i.
struct RadialBerezinMatrix {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd measure;
};
RadialBerezinMatrix radial_berezin_matrix(int n, int order);

}  // namespace hypnorm
