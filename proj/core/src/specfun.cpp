#include "hypnorm/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace hypnorm {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi x) with the argument reduced before multiplying by pi.
double sin_pi(double x) {
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

}  // namespace

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double pochhammer(double q, std::uint32_t k) {
  if (k == 0) return 1.0;
  if (q > 0.0 && k > 32) return std::exp(log_gamma(q + k) - log_gamma(q));
  double prod = 1.0;
  for (std::uint32_t j = 0; j < k; ++j) prod *= q + j;
  return prod;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  if (std::isinf(x)) return x;
  // Godfrey's coefficients for g = 671/128, as tabulated in Numerical Recipes (3rd ed.).
  static constexpr std::array<double, 14> cof = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : cof) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

SignedLogGamma signed_log_gamma(double x) {
  if (is_nonpositive_integer(x)) throw DomainError("signed_log_gamma: pole at " + std::to_string(x));
  if (x > 0.0) return {log_gamma(x), 1};
  // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
  const double s = sin_pi(x);
  return {std::log(kPi / std::abs(s)) - log_gamma(1.0 - x), s > 0.0 ? 1 : -1};
}

double log_beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("beta_fn: arguments must be positive");
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

double beta_fn(double x, double y) { return std::exp(log_beta(x, y)); }

double digamma(double x) {
  if (is_nonpositive_integer(x)) throw DomainError("digamma: pole at " + std::to_string(x));
  if (x < 0.0) {
    // psi(x) = psi(1 - x) - pi cot(pi x)
    return digamma(1.0 - x) - kPi * cos_pi(x) / sin_pi(x);
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // Asymptotic expansion with Bernoulli numbers B_2 .. B_14.
  const double tail =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 -
                                      inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12.0))))));
  return acc + std::log(x) - 0.5 / x - tail;
}

double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  double log_sum = 0.0;
  int sign = 1;
  for (double x : den) {
    if (is_nonpositive_integer(x)) return 0.0;
  }
  for (double x : num) {
    const auto g = signed_log_gamma(x);
    log_sum += g.log_abs;
    sign *= g.sign;
  }
  for (double x : den) {
    const auto g = signed_log_gamma(x);
    log_sum -= g.log_abs;
    sign *= g.sign;
  }
  return sign * std::exp(log_sum);
}

double hyp2f1_at_one(double a, double b, double c) {
  if (is_nonpositive_integer(c)) throw DomainError("hyp2f1_at_one: c is a non-positive integer");
  if (!(c - a - b > 0.0)) {
    throw DomainError("hyp2f1_at_one: Gauss summation needs c - a - b > 0, got " +
                      std::to_string(c - a - b));
  }
  return gamma_ratio({c, c - a - b}, {c - a, c - b});
}

const char* to_string(Growth g) {
  switch (g) {
    case Growth::bounded: return "bounded";
    case Growth::logarithmic: return "logarithmic";
    case Growth::power: return "power";
  }
  return "unknown";
}

DiagSup diag_sup(double x, double y) {
  if (!(y > 0.0)) throw DomainError("diag_sup: y must be positive");
  const double gap = y - 2.0 * x;
  if (gap > 0.0) {
    // Coefficients (x)_k^2 / ((y)_k k!) are non-negative, so the function is
    // increasing and the supremum is the Gauss value at r = 1.
    return {Growth::bounded, gamma_ratio({y, gap}, {y - x, y - x}), 0.0};
  }
  if (gap == 0.0) return {Growth::logarithmic, gamma_ratio({y}, {x, x}), 0.0};
  return {Growth::power, gamma_ratio({y, -gap}, {x, x}), -gap};
}

}  // namespace hypnorm
