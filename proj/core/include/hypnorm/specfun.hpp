#pragma once

// Scalar special functions: log-Gamma, Beta, Pochhammer, digamma and the
// Gauss hypergeometric function 2F1(a,b;c;z) on 0 <= z <= 1.

#include <cstdint>
#include <initializer_list>

#include "hypnorm/errors.hpp"

namespace hypnorm {

// Parameters of a single 2F1(a, b; c; z) evaluation.
struct HypArgs {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double z = 0.0;
};

/// Rising factorial (q)_k = q (q+1) ... (q+k-1), with (q)_0 = 1.
/// For q > 0 and large k the value is formed as exp(lnG(q+k) - lnG(q)).
double pochhammer(double q, std::uint32_t k);

/// ln Gamma(x) for x > 0. Lanczos approximation (g = 671/128, 15 terms);
/// error below 1e-13 * max(1, |ln Gamma(x)|) on [1e-6, 1e6].
double log_gamma(double x);

/// ln|Gamma(x)| together with the sign of Gamma(x), for any x that is not a
/// non-positive integer. Negative arguments go through the reflection formula.
struct SignedLogGamma {
  double log_abs = 0.0;
  int sign = 1;
};
SignedLogGamma signed_log_gamma(double x);

/// Euler Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), x, y > 0.
double beta_fn(double x, double y);
double log_beta(double x, double y);

/// psi(x) = Gamma'(x)/Gamma(x); throws DomainError at the poles x = 0, -1, -2, ...
double digamma(double x);

/// prod Gamma(num_i) / prod Gamma(den_j), evaluated as exp of a signed sum of
/// log-Gammas. A pole in the denominator contributes a zero factor; a pole in
/// the numerator is a DomainError.
double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den);

/// True when x is exactly 0, -1, -2, ...
bool is_nonpositive_integer(double x);

/// 2F1(a,b;c;z) for 0 <= z <= 1. Relative error target 1e-10.
///
/// z <= 0.7 sums the defining series. Closer to 1 the Euler transform first
/// makes c-a-b non-negative, then the z -> 1-z connection formulas (with the
/// logarithmic variants when c-a-b is an integer) are summed in powers of 1-z.
///
/// Throws DomainError when c is a non-positive integer or z is outside [0,1],
/// DivergenceError for z = 1 with c-a-b <= 0.
double hyp2f1(const HypArgs& args);
double hyp2f1(double a, double b, double c, double z);

/// 2F1(a,b;c;1-w) with the complement w = 1-z passed directly; keeps full
/// relative precision in 1-z when z is within rounding distance of 1.
double hyp2f1_complement(double a, double b, double c, double w);

/// Plain partial sums of the defining series. Stops once three consecutive
/// terms are below 1e-16 of the partial sum; more than 100000 terms is a
/// ConvergenceError.
double hyp2f1_series(double a, double b, double c, double z);

/// Gauss summation 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)).
double hyp2f1_at_one(double a, double b, double c);

enum class Growth { bounded, logarithmic, power };

const char* to_string(Growth g);

// Behaviour of r -> 2F1(x, x; y; r) on (0, 1).
struct DiagSup {
  Growth growth = Growth::bounded;
  // Supremum when bounded, otherwise the coefficient of the leading
  // divergent term log(1/(1-r)) or (1-r)^(-exponent).
  double value = 0.0;
  // 2x - y for power growth, zero otherwise.
  double exponent = 0.0;
};

/// sup over r in (0,1) of 2F1(x,x;y;r): finite iff y > 2x. y <= 0 is a DomainError.
DiagSup diag_sup(double x, double y);

}  // namespace hypnorm
