#include <cmath>
#include <numbers>

#include <doctest.h>

#include <hypnorm/normest.hpp>

#include "support/oracles.hpp"

using namespace hypnorm;
using doctest::Approx;

TEST_CASE("supremum_grid: Chebyshev points plus 1 - 2^-k") {
  const auto g = supremum_grid(8);
  CHECK(g.size() == 8u + kRefinementLevels);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i].complement < g[i - 1].complement);
  CHECK(g.back().complement == std::ldexp(1.0, -kRefinementLevels));
  for (const auto& p : g) CHECK(p.x + p.complement == Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(supremum_grid(0), DomainError);
}

TEST_CASE("l1_norm_numeric: examples") {
  const auto a = l1_norm_numeric({1.0, 1.0});
  CHECK(a.bounded());
  CHECK(a.value == Approx(4.0 / std::numbers::pi).epsilon(1e-6));

  const auto b = l1_norm_numeric({2.0, 2.0});
  CHECK(b.value == Approx(2.0 / std::pow(std::tgamma(2.5), 2)).epsilon(1e-6));

  const auto c = l1_norm_numeric({1.0, 0.0});
  CHECK(c.growth == Growth::logarithmic);
  CHECK(std::isinf(c.value));
  CHECK(c.coefficient == Approx(1.0));

  const auto d = l1_norm_numeric({1.0, -0.5});
  CHECK(d.growth == Growth::power);
  CHECK(d.exponent == Approx(0.5));
}

TEST_CASE("l1_column_integral: the column integral is (1-t)^sigma 2F1(lambda,lambda;mu+1;t)") {
  const OperatorParams p(2.0, 0.5);
  for (double t : {0.1, 0.5, 0.9, 1.0 - 1e-8}) {
    const double want = std::pow(1.0 - t, p.sigma()) * hyp2f1(p.lambda(), p.lambda(), p.mu() + 1.0, t);
    CHECK(l1_column_integral(p, t, 1.0 - t) == Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("schur_check: examples") {
  const auto a = schur_check({1.0, 0.0}, LebesgueExponent(2.0));
  CHECK(a.bound == Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(a.max_ratio_right <= a.bound * (1.0 + 1e-6));
  CHECK(a.max_ratio_left <= a.bound * (1.0 + 1e-6));
  CHECK(a.end_ratio_right == Approx(a.bound).epsilon(1e-2));

  const auto b = schur_check({1.0, 1.0}, LebesgueExponent(2.0));
  CHECK(b.bound == Approx(2.0).epsilon(1e-14));

  CHECK_THROWS_AS(schur_check({1.0, -0.5}, LebesgueExponent(2.0)), UnboundedOperatorError);
  CHECK_THROWS_AS(schur_check({1.0, 1.0}, LebesgueExponent(1.0)), DomainError);
}

TEST_CASE("schur ratios approach the bound monotonically toward the endpoint (mu = 1, sigma = 0, p = 2)") {
  const OperatorParams p(1.0, 0.0);
  const LebesgueExponent e(2.0);
  double prev = 0.0;
  for (int k = 1; k <= 40; k += 3) {
    const double u = std::ldexp(1.0, -k);
    const double r = schur_ratio_right(p, e, 1.0 - u, u);
    CHECK(r >= prev);
    prev = r;
  }
  CHECK(prev == Approx(std::numbers::pi).epsilon(1e-3));
}

TEST_CASE("ExtremalFamily: normalization and derived exponents") {
  const LebesgueExponent p(3.0);
  const ExtremalFamily f(1.5, p, 2.0, 0.5);
  CHECK(f.vartheta() == 0.0);
  CHECK(f.vartheta_tilde() == Approx(-0.5));
  // ||Phi||_p^p = mu C^p B(theta+mu, theta~+1) = 1
  CHECK(1.5 * std::pow(f.C(), 3.0) * beta_fn(2.0 + 1.5, 1.5) == Approx(1.0).epsilon(1e-13));
  CHECK(1.5 * std::pow(f.C_tilde(), 1.5) * beta_fn(1.5, 0.5) == Approx(1.0).epsilon(1e-13));
  // The same norm by quadrature; the rule carries the (1-t)^theta~ factor of Phi^p.
  const auto rule = make_jacobi_rule(0.5, 0.5, 16);
  const double phi_p =
      1.5 * rule.integrate([&](double t) { return std::pow(f.phi(t), 3.0) / std::sqrt(1.0 - t); });
  CHECK(phi_p == Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(ExtremalFamily(1.0, p, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(ExtremalFamily(1.0, p, 2.0, -1.0), DomainError);
  CHECK_THROWS_AS(ExtremalFamily(1.0, LebesgueExponent(1.0), 2.0, 0.0), DomainError);
}

TEST_CASE("on_path: theta~ + 1 = (theta - 1)/(p - 1)") {
  for (double p : {1.5, 2.0, 4.0}) {
    const auto f = ExtremalFamily::on_path(1.0, LebesgueExponent(p), 1e-3);
    CHECK(f.theta_tilde() + 1.0 == Approx((f.theta() - 1.0) / (p - 1.0)).epsilon(1e-12));
    CHECK(path_gamma_ratio(p, 1e-3) == Approx(1.0).epsilon(1e-13));
  }
  CHECK(path_gamma_ratio(2.0, 1e-6) == Approx(1.0).epsilon(1e-13));
}

TEST_CASE("bilinear_form: closed form against the double integral") {
  const OperatorParams p(1.0, 0.0);
  const ExtremalFamily f(1.0, LebesgueExponent(2.0), 2.0, 0.0);
  // C = B(3,1)^(-1/2) = sqrt 3, C~ = 1; value = sqrt 3 * Gamma(2)Gamma(1)Gamma(1)Gamma(1)/Gamma(2)^2
  CHECK(bilinear_form_closed(p, f) == Approx(std::sqrt(3.0)).epsilon(1e-13));
  CHECK(bilinear_form_numeric(p, f) == Approx(bilinear_form_closed(p, f)).epsilon(1e-8));
}

TEST_CASE("bilinear_form: closed/numeric twin on random draws") {
  oracle::Gen gen(41);
  for (int i = 0; i < 20; ++i) {
    const double pe = gen.uniform(1.25, 3.0);
    const double mu = gen.uniform(0.5, 3.0);
    const double sigma = gen.uniform(std::max(0.0, 1.0 / pe - 0.9), 1.5);
    const ExtremalFamily f(mu, LebesgueExponent(pe), gen.uniform(1.5, 3.0), gen.uniform(-0.9, 1.0));
    const OperatorParams p(mu, sigma);
    CHECK(bilinear_form_numeric(p, f) == Approx(bilinear_form_closed(p, f)).epsilon(1e-7));
  }
}

TEST_CASE("bilinear_form_numeric reports theta~ too close to -1") {
  const ExtremalFamily f(1.0, LebesgueExponent(2.0), 1.001, -0.999);
  CHECK_THROWS_AS(bilinear_form_numeric({1.0, 0.5}, f), ConvergenceError);
}

TEST_CASE("bilinear_form_closed: mismatched mu is rejected") {
  const ExtremalFamily f(2.0, LebesgueExponent(2.0), 2.0, 0.0);
  CHECK_THROWS_AS(bilinear_form_closed({1.0, 0.0}, f), DomainError);
}

TEST_CASE("lower_bound_sweep: increases toward the norm and stays below it") {
  const OperatorParams p(1.0, 0.0);
  const LebesgueExponent e(2.0);
  std::vector<double> etas;
  for (double eta = 0.5; eta > 1e-8; eta /= 3.0) etas.push_back(eta);
  const auto sweep = lower_bound_sweep(p, e, etas);
  for (std::size_t i = 1; i < sweep.size(); ++i) CHECK(sweep[i].value >= sweep[i - 1].value * (1.0 - 1e-9));
  for (const auto& pt : sweep) CHECK(pt.ratio <= 1.0 + 1e-6);

  const auto at = lower_bound_sweep(p, e, {1e-2, 1e-4});
  CHECK(at[0].ratio >= 0.95);
  CHECK(at[1].ratio >= 0.999);

  CHECK_THROWS_AS(lower_bound_sweep(p, e, {1e-3, 1e-2}), DomainError);
  CHECK_THROWS_AS(lower_bound_sweep(p, e, {-1.0}), DomainError);
}

TEST_CASE("weighted p-norm: diagonal and rank-one matrices") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d.diagonal() << 1.0, 3.0, 2.0;
  const Eigen::VectorXd m = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
  for (double p : {1.5, 2.0, 5.0}) CHECK(weighted_pnorm_power(d, m, p).value == Approx(3.0).epsilon(1e-10));

  // A = u v^T under weights m: ||A||_{p,m} = ||u||_{p,m} ||v / m||_{q,m}.
  const Eigen::VectorXd u = (Eigen::VectorXd(3) << 1.0, 2.0, 0.5).finished();
  const Eigen::VectorXd v = (Eigen::VectorXd(3) << 0.3, 0.1, 0.6).finished();
  const Eigen::VectorXd w = (Eigen::VectorXd(3) << 0.2, 0.5, 0.3).finished();
  const double p = 3.0, q = 1.5;
  double nu = 0.0, nv = 0.0;
  for (int i = 0; i < 3; ++i) {
    nu += w(i) * std::pow(u(i), p);
    nv += w(i) * std::pow(v(i) / w(i), q);
  }
  const double want = std::pow(nu, 1.0 / p) * std::pow(nv, 1.0 / q);
  CHECK(weighted_pnorm_power(u * v.transpose(), w, p).value == Approx(want).epsilon(1e-10));

  CHECK_THROWS_AS(weighted_pnorm_power(d, m, 1.0), DomainError);
  CHECK_THROWS_AS(weighted_pnorm_power(d, Eigen::VectorXd::Ones(2), 2.0), DomainError);
}

TEST_CASE("lp_opnorm_numeric: p = 2 power method agrees with the SVD route") {
  const auto d = discretize({1.0, 0.0}, LebesgueExponent(2.0), 128);
  const auto est = lp_opnorm_numeric(d);
  CHECK(est.converged);
  CHECK(est.value == Approx(l2_opnorm_svd(d)).epsilon(1e-8));
  CHECK(est.value < std::numbers::pi);
  CHECK_THROWS_AS(l2_opnorm_svd(discretize({1.0, 0.0}, LebesgueExponent(3.0), 8)), DomainError);
}

TEST_CASE("lp_opnorm_numeric: deterministic for a fixed seed") {
  const auto d = discretize({2.0, 0.5}, LebesgueExponent(3.0), 64);
  CHECK(lp_opnorm_numeric(d, 5).value == lp_opnorm_numeric(d, 5).value);
}

TEST_CASE("norm_report: sandwich and blow-up flag") {
  const auto rep = norm_report({2.0, 0.5}, LebesgueExponent(3.0), {128, 16, 1e-6, kDefaultSeed});
  CHECK(rep.sandwich_holds());
  CHECK_FALSE(rep.blowup_regime);
  CHECK(rep.rel_gap_lower >= -1e-6);
  CHECK(rep.rel_gap_lower < 1e-3);
  CHECK(rep.rel_gap_nystrom > 0.0);

  const auto near = norm_report({1.0, -0.45}, LebesgueExponent(2.0), {64, 8, 1e-4, kDefaultSeed});
  CHECK(near.blowup_regime);
  CHECK(near.sandwich_holds());

  const auto l1 = norm_report({1.0, 1.0}, LebesgueExponent(1.0), {64, 16, 1e-4, kDefaultSeed});
  CHECK(std::isnan(l1.schur_max_ratio_right));
  CHECK(l1.nystrom_estimate == Approx(4.0 / std::numbers::pi).epsilon(1e-6));
}

TEST_CASE("blow-up regime: the discrete estimate grows with order") {
  const OperatorParams p(1.0, -0.45);
  const LebesgueExponent e(2.0);
  const double a = l2_opnorm_svd(discretize(p, e, 32));
  const double b = l2_opnorm_svd(discretize(p, e, 128));
  CHECK(b > a * 1.05);
  CHECK(b < norm_formula(p, e));
}
