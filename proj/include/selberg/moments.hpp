#ifndef SELBERG_MOMENTS_HPP
#define SELBERG_MOMENTS_HPP

#include <vector>

#include "selberg/poly.hpp"
#include "selberg/rational.hpp"

namespace selberg {

/// A request for the moment polynomial <prod_j (x - z_j)^mu> under the
/// weight z^(a-1) (1-z)^(b-1) with pair interaction exponent 2*tau.
/// The engine itself runs at the shifted first exponent a-1; requests for
/// which that shift is singular are rejected (except mu = 1, which has a
/// terminating hypergeometric evaluation free of the shift).
struct MomentRequest {
    long n = 1;
    Rational tau;
    Rational a;
    Rational b;
    long mu = 1;
};

struct MomentResult {
    Poly poly;               // monic, degree n*mu
    MomentRequest request;
    Rational endpoint0;      // expected value at x=0: (-1)^(n mu) S(a+mu,b)/S(a,b)
    Rational endpoint1;      // expected value at x=1: S(a,b+mu)/S(a,b)
};

/// Component k of the starting vector <phi_k>:
///   (-1)^n (alpha; tau)_n / (alpha+beta+(n-1)tau; tau)_n
///   * (-beta-(n-1)tau; tau)_k / (alpha; tau)_k.
/// Throws ParameterSingular when (alpha; tau)_k = 0 for some k <= n or the
/// common denominator vanishes.
std::vector<Rational> initial_vector(long n, const Rational& alpha, const Rational& beta,
                                     const Rational& tau);

/// Starting vector times the mu-step matrix product, evaluated left to right
/// as vector-matrix products over Poly. Step k uses the difference matrix at
/// first exponent k and coordinates (x, 0, 1). mu = 0 returns the starting
/// vector unchanged.
std::vector<Poly> chain(long n, const Rational& alpha, const Rational& beta, const Rational& tau,
                        long mu);

/// The exact moment polynomial for the request, with the two Selberg-ratio
/// endpoint values attached.
MomentResult moment_polynomial(const MomentRequest& req);

/// Terminating Gauss hypergeometric sum 2F1(neg_n, b; c; x) as an exact
/// polynomial of degree |neg_n|. Requires neg_n <= 0; throws
/// ParameterSingular when (c)_k vanishes for a needed k.
Poly gauss_2f1_terminating(long neg_n, const Rational& b, const Rational& c);

/// mu = 1 closed form: the monic Jacobi-type polynomial
///   c * 2F1(-n, (a+b)/tau + n - 1; a/tau; x),
///   c = (-1)^n (a; tau)_n / (a+b+(n-1)tau; tau)_n.
Poly closed_form_mu1(long n, const Rational& a, const Rational& b, const Rational& tau);

} // namespace selberg

#endif
