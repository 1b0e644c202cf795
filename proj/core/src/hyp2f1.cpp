#include <cmath>
#include <string>

#include "hypnorm/specfun.hpp"

namespace hypnorm {

namespace {

constexpr int kMaxTerms = 100000;
constexpr double kSeriesTol = 1e-16;
// Below this distance from the series radius the defining series is replaced
// by the connection formulas around z = 1.
constexpr double kSeriesMaxZ = 0.7;
// |c-a-b - m| below this counts as the logarithmic (integer) case.
constexpr double kDegenerate = 1e-5;
// Close to an integer c-a-b the two connection terms cancel; the plain series
// is still cheap up to this z and is used instead.
constexpr double kNearIntegerSeriesMaxZ = 0.9;
constexpr double kNearInteger = 1e-2;

void check_c(double c) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("hyp2f1: c must not be zero or a negative integer, got " + std::to_string(c));
  }
}

bool terminates(double a, double b) {
  return is_nonpositive_integer(a) || is_nonpositive_integer(b);
}

// c = a + b + m with integer m >= 0; DLMF 15.8.10.
double integer_case(double a, double b, int m, double w) {
  const double c = a + b + m;
  const double log_w = std::log(w);

  double finite = 0.0;
  if (m > 0) {
    double term = 1.0;  // (a)_k (b)_k (-w)^k / k!
    double fact = std::tgamma(static_cast<double>(m));  // (m-k-1)!
    for (int k = 0; k < m; ++k) {
      finite += term * fact;
      term *= (a + k) * (b + k) / (k + 1.0) * (-w);
      if (m - k - 1 > 0) fact /= (m - k - 1);
    }
    finite *= gamma_ratio({c}, {a + m, b + m});
  }

  // (a+m)_k (b+m)_k w^k / (k! (k+m)!) times the digamma bracket.
  double term = 1.0 / std::tgamma(m + 1.0);
  double psi_k1 = digamma(1.0);
  double psi_km1 = digamma(m + 1.0);
  double psi_a = digamma(a + m);
  double psi_b = digamma(b + m);
  double sum = 0.0;
  int small = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double contrib = term * (log_w - psi_k1 - psi_km1 + psi_a + psi_b);
    sum += contrib;
    if (std::abs(contrib) < kSeriesTol * std::abs(sum) || contrib == 0.0) {
      if (++small == 3) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;  // (-w)^m = sign * w^m
        return finite - sign * std::pow(w, m) * gamma_ratio({c}, {a, b}) * sum;
      }
    } else {
      small = 0;
    }
    term *= (a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0)) * w;
    psi_k1 += 1.0 / (k + 1.0);
    psi_km1 += 1.0 / (k + m + 1.0);
    psi_a += 1.0 / (a + m + k);
    psi_b += 1.0 / (b + m + k);
  }
  throw ConvergenceError("hyp2f1: logarithmic connection series did not converge");
}

// Non-integer s = c-a-b; DLMF 15.8.4 / A&S 15.3.6.
double generic_case(double a, double b, double c, double w) {
  const double s = c - a - b;
  const double first = gamma_ratio({c, s}, {c - a, c - b});
  const double second = gamma_ratio({c, -s}, {a, b});
  double value = 0.0;
  if (first != 0.0) value += first * hyp2f1_series(a, b, 1.0 - s, w);
  if (second != 0.0) value += second * std::pow(w, s) * hyp2f1_series(c - a, c - b, 1.0 + s, w);
  return value;
}

// Requires c - a - b >= 0, w < 1 - kSeriesMaxZ, no terminating parameter.
double connection_nonnegative(double a, double b, double c, double w) {
  const double s = c - a - b;
  const double m = std::round(s);
  const double d = s - m;
  if (std::abs(d) > kDegenerate) return generic_case(a, b, c, w);
  const double f0 = integer_case(a, b, static_cast<int>(m), w);
  if (d == 0.0) return f0;
  // Quadratic interpolation in c through the exact integer point and two
  // non-degenerate neighbours.
  const double h = 2.0 * kDegenerate;
  const double c0 = a + b + m;
  const double fm = generic_case(a, b, c0 - h, w);
  const double fp = generic_case(a, b, c0 + h, w);
  const double x = d / h;
  return f0 + 0.5 * x * (fp - fm) + 0.5 * x * x * (fp - 2.0 * f0 + fm);
}

double near_one(double a, double b, double c, double w) {
  const double s = c - a - b;
  if (s < 0.0) {
    // Euler transform 2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a,c-b;c;z) flips the sign of c-a-b.
    const double a2 = c - a;
    const double b2 = c - b;
    const double scale = std::pow(w, s);
    if (terminates(a2, b2)) return scale * hyp2f1_series(a2, b2, c, 1.0 - w);
    return scale * connection_nonnegative(a2, b2, c, w);
  }
  return connection_nonnegative(a, b, c, w);
}

}  // namespace

double hyp2f1_series(double a, double b, double c, double z) {
  check_c(c);
  double sum = 1.0;
  double term = 1.0;
  int small = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) < kSeriesTol * std::abs(sum)) {
      if (++small == 3) return sum;
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series exceeded " + std::to_string(kMaxTerms) + " terms");
}

namespace {

// z and w = 1 - z are both supplied so that whichever is small keeps its
// full relative precision.
double evaluate(double a, double b, double c, double z, double w) {
  check_c(c);
  if (!(z >= 0.0 && z <= 1.0) || !(w >= 0.0 && w <= 1.0)) {
    throw DomainError("hyp2f1: z must lie in [0, 1], got " + std::to_string(z));
  }
  if (z == 0.0) return 1.0;
  if (w == 0.0) {
    if (terminates(a, b)) return hyp2f1_series(a, b, c, 1.0);
    if (!(c - a - b > 0.0)) {
      throw DivergenceError("hyp2f1: series diverges at z = 1 since c - a - b = " +
                            std::to_string(c - a - b));
    }
    return hyp2f1_at_one(a, b, c);
  }
  if (z <= kSeriesMaxZ || terminates(a, b)) return hyp2f1_series(a, b, c, z);
  const double s = c - a - b;
  if (z <= kNearIntegerSeriesMaxZ && std::abs(s - std::round(s)) < kNearInteger) {
    return hyp2f1_series(a, b, c, z);
  }
  return near_one(a, b, c, w);
}

}  // namespace

double hyp2f1_complement(double a, double b, double c, double w) {
  return evaluate(a, b, c, 1.0 - w, w);
}

double hyp2f1(double a, double b, double c, double z) { return evaluate(a, b, c, z, 1.0 - z); }

double hyp2f1(const HypArgs& args) { return hyp2f1(args.a, args.b, args.c, args.z); }

}  // namespace hypnorm
