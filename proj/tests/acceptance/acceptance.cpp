// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <hypnorm/ball.hpp>
#include <hypnorm/normest.hpp>
#include <hypnorm/specfun.hpp>

#include "cli/suites.hpp"
#include "support/oracles.hpp"

using namespace hypnorm;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
  double worst = 0.0;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void track(double err) { worst = std::max(worst, std::isnan(err) ? std::numeric_limits<double>::infinity() : err); }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

int failures = 0;

void report(int id, const char* name, const Outcome& o) {
  std::printf("%s [%2d] %-32s worst=%.3e%s%s\n", o.pass ? "PASS" : "FAIL", id, name, o.worst,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  if (!o.pass) ++failures;
}

Outcome identities() {
  Outcome o;
  cli::SuiteConfig cfg;
  cfg.draws = 100;
  for (const auto& r : cli::run_identities(cfg)) {
    for (const auto& [route, err] : r.rel_errors) o.track(std::abs(err));
    o.require(r.status == cli::Status::pass, r.scenario);
  }
  o.require(o.worst <= 1e-7, "tolerance 1e-7");
  return o;
}

Outcome l1_norms() {
  Outcome o;
  for (double mu : {1.0, 2.0, 3.0}) {
    for (double sigma : {0.5, 1.0, 2.0}) {
      const OperatorParams p(mu, sigma);
      const double want = std::exp(oracle::log_gamma(mu + 1.0) + oracle::log_gamma(sigma) -
                                   2.0L * oracle::log_gamma(p.lambda()));
      const auto est = l1_norm_numeric(p);
      o.track(rel(est.value, want));
      o.track(rel(norm_formula(p, LebesgueExponent(1.0)), want));
    }
    o.require(l1_norm_numeric({mu, 0.0}).growth == Growth::logarithmic, "sigma=0 not logarithmic");
  }
  o.require(o.worst <= 1e-6, "tolerance 1e-6");
  return o;
}

Outcome schur_grid() {
  Outcome o;
  double worst_end = 0.0;
  for (double mu : {1.0, 2.0, 3.0}) {
    for (double sigma : {0.0, 0.5, 1.0}) {
      for (double pe : {1.5, 2.0, 3.0}) {
        const auto c = schur_check({mu, sigma}, LebesgueExponent(pe));
        const double over = std::max(c.max_ratio_right, c.max_ratio_left) / c.bound - 1.0;
        o.track(std::max(over, 0.0));
        o.require(over <= 1e-6, "ratio above bound");
        const double end = std::max(rel(c.end_ratio_right, c.bound), rel(c.end_ratio_left, c.bound));
        worst_end = std::max(worst_end, end);
      }
    }
  }
  o.require(worst_end <= 1e-2, "endpoint ratio not within 1%");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("endpoint gap %.2e", worst_end);
  return o;
}

Outcome sweep() {
  // (mu, sigma, p, ratio at eta=1e-4 from the high-precision oracle)
  struct Triple {
    double mu, sigma, p, oracle_ratio;
  };
  const Triple triples[] = {{1.0, 0.0, 2.0, 0.999911379328}, {1.0, 1.0, 2.0, 0.999888642575},
                            {2.0, 0.5, 1.5, 0.999922799717}, {3.0, 1.0, 3.0, 0.999760065268},
                            {1.0, -0.25, 2.0, 0.999843562462}, {2.0, 2.0, 4.0, 0.999617683183}};
  Outcome o;
  for (const auto& t : triples) {
    const auto pts = lower_bound_sweep({t.mu, t.sigma}, LebesgueExponent(t.p), {1e-2, 1e-4});
    const double threshold = (&t == &triples[0]) ? 0.999 : 0.99;
    o.require(pts[1].ratio >= threshold, fmt("ratio %.6f below threshold", pts[1].ratio));
    o.require(pts[1].ratio <= 1.0 + 1e-12, "ratio above 1");
    o.track(std::abs(pts[1].ratio - t.oracle_ratio));
    if (&t == &triples[0]) o.require(pts[0].ratio >= 0.95, "eta=1e-2 ratio below 0.95");
  }
  o.require(o.worst <= 1e-8, "oracle ratio mismatch");
  return o;
}

Outcome twin() {
  Outcome o;
  oracle::Gen gen(20240611);
  int done = 0;
  auto one = [&](double mu, double sigma, double pe, double th, double tt) {
    const OperatorParams params(mu, sigma);
    const ExtremalFamily f(mu, LebesgueExponent(pe), th, tt);
    o.track(rel(bilinear_form_numeric(params, f), bilinear_form_closed(params, f)));
    ++done;
  };
  for (double pe : {1.5, 2.0, 3.0}) one(1.0, 0.5, pe, 2.0, -0.9);
  for (int i = 0; i < 57; ++i) {
    const double pe = gen.uniform(1.25, 3.0);
    const double mu = gen.uniform(0.5, 3.0);
    const double sigma = gen.uniform(std::max(0.0, 1.0 / pe - 0.9), 1.5);
    one(mu, sigma, pe, gen.uniform(1.5, 3.0), gen.uniform(-0.9, 1.0));
  }
  o.require(done >= 50, "fewer than 50 draws");
  o.require(o.worst <= 1e-7, "tolerance 1e-7");
  return o;
}

Outcome discrete_norm() {
  Outcome o;
  const OperatorParams params(1.0, 0.0);
  const LebesgueExponent e(2.0);
  double prev = 0.0, at256 = 0.0;
  for (int order : {64, 128, 256, 512}) {
    const auto d = discretize(params, e, order);
    const double svd = l2_opnorm_svd(d);
    const auto pw = lp_opnorm_numeric(d);
    o.track(rel(pw.value, svd));
    o.require(svd >= prev * (1.0 - 1e-6), "not nondecreasing in order");
    o.require(svd <= kPi * (1.0 + 1e-12), "estimate above the norm");
    if (order == 256) at256 = pw.value;
    prev = svd;
  }
  o.require(o.worst <= 1e-8, "svd/power mismatch");
  o.require(at256 >= 0.9 * kPi, fmt("order-256 estimate %.5f pi below 0.90 pi", at256 / kPi));
  return o;
}

Outcome bridge() {
  Outcome o;
  for (int n : {1, 2, 3, 5}) {
    for (double sigma : {0.0, 0.5, 1.0, 2.5}) {
      for (double pe : {1.25, 2.0, 3.0, 6.0}) {
        const BallParams bp(n, sigma);
        o.track(rel(tilde_norm_formula(bp, pe), c_sigma(n, sigma) * norm_formula(bp.interval(), LebesgueExponent(pe))));
      }
    }
  }
  o.track(rel(tilde_norm_formula(BallParams(1, 0.0), 2.0), kPi));
  o.track(rel(tilde_norm_formula(BallParams(1, 1.0), 1.0), 8.0 / kPi));
  o.require(o.worst <= 1e-12, "tolerance 1e-12");
  return o;
}

Outcome berezin() {
  Outcome o;
  for (int n = 1; n <= 10; ++n) o.track(rel(berezin_norm(n, 2.0), berezin_l2_doublefactorial(n)));
  o.require(o.worst <= 1e-12, "double factorial mismatch");
  for (int n = 1; n <= 10; ++n) o.require(berezin_norm(n, std::numeric_limits<double>::infinity()) == 1.0, "p=inf");
  double asym = 0.0;
  for (int n = 1; n <= 3; ++n) asym = std::max(asym, std::abs(berezin_norm(n, 1.001) / berezin_asymptotic_p_to_1(n, 1.001) - 1.0));
  o.require(asym <= 5e-3, "p->1 ratio outside 0.5%");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("p->1 gap %.2e", asym);
  return o;
}

Outcome disc() {
  Outcome o;
  const DiscFunction one = [](cplx) { return 1.0; };
  double e_one = 0.0, e_fix = 0.0, e_rad = 0.0;
  for (double r : {0.0, 0.3, 0.6, 0.9}) {
    for (double arg : {0.0, 1.0, 2.5}) e_one = std::max(e_one, std::abs(berezin_apply_disc(one, std::polar(r, arg)) - 1.0));
  }
  const DiscFunction re = [](cplx w) { return w.real(); };
  for (cplx z : {cplx(0.0, 0.0), cplx(0.3, 0.0), cplx(0.0, 0.6)}) {
    e_fix = std::max(e_fix, std::abs(berezin_apply_disc(re, z) - z.real()));
  }
  const Profile h{[](double t) { return std::exp(-t) + t; }, 0.0};
  const DiscFunction f = [](cplx w) {
    const double t = std::norm(w);
    return std::exp(-t) + t;
  };
  for (double sigma : {0.0, 1.0, 2.0}) {
    for (double r : {0.0, 0.5, 0.9}) {
      const double a = radial_apply(BallParams(1, sigma), h, r * r, kVerificationRuleOrder);
      e_rad = std::max(e_rad, rel(tilde_apply_disc(sigma, f, {r, 0.0}), a));
    }
  }
  o.track(e_one);
  o.track(e_fix);
  o.track(e_rad);
  o.require(e_one <= 1e-8, "f=1 not reproduced");
  o.require(e_fix <= 1e-6, "Re w not fixed");
  o.require(e_rad <= 1e-6, "radial/polar mismatch");
  return o;
}

Outcome bloch() {
  Outcome o;
  const auto b = bloch_constants(BallParams(1, 0.0));
  o.track(rel(b.beta_norm, 8.0 / kPi));
  o.track(rel(b.full_norm, 1.0 + 8.0 / kPi));
  o.require(o.worst <= 1e-12, "tolerance 1e-12");
  return o;
}

}  // namespace

int main() {
  report(1, "hypergeometric identities", identities());
  report(2, "L1 norm numeric vs closed form", l1_norms());
  report(3, "Schur test grid", schur_grid());
  report(4, "extremal-family sweep", sweep());
  report(5, "bilinear form twin", twin());
  report(6, "discrete L2 norm (mu=1,sigma=0)", discrete_norm());
  report(7, "ball/interval bridge", bridge());
  report(8, "Berezin norms", berezin());
  report(9, "disc transforms", disc());
  report(10, "Bloch constants", bloch());
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
