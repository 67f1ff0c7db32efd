#ifndef SELBERG_SELBERG_INTEGRAL_HPP
#define SELBERG_SELBERG_INTEGRAL_HPP

#include "selberg/rational.hpp"

namespace selberg {

/// Parameters (alpha, beta, tau, n) of the n-variable Selberg integral
/// S_n(alpha, beta, tau). The checked constructor enforces the positivity
/// needed for convergence; `continued` skips the check, since the ratio
/// recurrence is a rational-function identity valid wherever its
/// denominators are nonzero.
struct SelbergParams {
    Rational alpha;
    Rational beta;
    Rational tau;
    long n = 1;

    SelbergParams(const Rational& alpha_, const Rational& beta_, const Rational& tau_, long n_);
    static SelbergParams continued(const Rational& alpha_, const Rational& beta_,
                                   const Rational& tau_, long n_);

private:
    SelbergParams() = default;
};

/// S_n(alpha + m, beta, tau) / S_n(alpha, beta, tau), exactly, by iterating
/// the one-step recurrence
///   S(alpha+1)/S(alpha) = prod_{i=1}^{n} (alpha+(n-i)tau) / (alpha+beta+(2n-i-1)tau).
/// Throws ParameterSingular when a denominator factor vanishes along the way.
Rational selberg_ratio_alpha(const SelbergParams& p, long m);

/// Same with the roles of alpha and beta exchanged (the integral is
/// symmetric in its first two parameters).
Rational selberg_ratio_beta(const SelbergParams& p, long m);

/// Floating-point value of S_n via the Gamma-product evaluation
///   prod_{j=0}^{n-1} G(a+j t) G(b+j t) G(1+(j+1) t) / (G(a+b+(n+j-1) t) G(1+t)),
/// computed through log-Gamma. Relative accuracy ~1e-10 for moderate
/// parameters.
double selberg_value_numeric(const SelbergParams& p);

} // namespace selberg

#endif
