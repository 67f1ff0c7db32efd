#ifndef SELBERG_ORACLE_HPP
#define SELBERG_ORACLE_HPP

#include <vector>

#include "selberg/multivariate.hpp"
#include "selberg/poly.hpp"
#include "selberg/rational.hpp"

namespace selberg {

/// Desk-scale parameter set for the brute-force averages. The coordinates
/// are pinned to x2 = 0, x3 = 1; tau and alpha1 are positive integers so the
/// integrand's non-weight part is a polynomial; x1 outside (0,1) (or alpha1
/// odd) keeps the |x1 - z|^(alpha1-1) factor sign-definite on the cube.
struct OracleParams {
    int n = 1;
    int tau = 1;
    int alpha1 = 1;
    Rational alpha2;
    Rational alpha3;
    Rational x1;

    OracleParams(int n_, int tau_, int alpha1_, const Rational& alpha2_, const Rational& alpha3_,
                 const Rational& x1_);
};

/// Index pair (i, j) of an interpolation polynomial, 0 <= i, j <= n.
struct PhiIndex {
    int i = 0;
    int j = 0;
};

/// Exact expansion of prod_{j<k} (z_j - z_k)^(2 tau). Supported for
/// n <= 3, tau <= 3.
Expansion<Rational> expand_vandermonde_power(int n, int tau);

/// Normalized product-Beta moment of z^c: prod_i (a2)_{c_i} / (a2+a3)_{c_i},
/// the shifted factorials taken with unit step and the reflected extension
/// for negative exponents. Throws DivergentIntegral unless a2 + c_i > 0 for
/// every i and a3 > 0.
Rational monomial_average(const std::vector<int>& exponents, const Rational& a2,
                          const Rational& a3);

/// phi_{i,j} over nvars variables at coordinates (x1, 0, 1):
///   prod_{l=1..j} (z_l - x1) * prod_{l=1..nvars-i} (0 - z_l)
///   * prod_{l=nvars-i+1..nvars} (1 - z_l).
Expansion<Rational> interpolation_poly(int nvars, PhiIndex idx, const Rational& x1);

/// Caches the polynomial part of the weight for one parameter set and
/// evaluates averages against it.
class OracleEvaluator {
public:
    explicit OracleEvaluator(const OracleParams& p);

    /// Normalized average <phi>/<1>; always rational.
    Rational average(const Expansion<Rational>& phi) const;

    /// Same for expansions whose coefficients carry the spectator
    /// indeterminate x; the result is then a polynomial in x.
    Poly average(const Expansion<Poly>& phi) const;

    /// Integral of phi against the bare weight in units of B(a2, a3)^n
    /// (valid up to that positive constant; exact zero tests and ratios are
    /// unaffected).
    Rational raw_scaled(const Expansion<Rational>& phi) const;
    Poly raw_scaled(const Expansion<Poly>& phi) const;

    const OracleParams& params() const { return p_; }

private:
    const Rational& cached_average(const std::vector<int>& mono) const;

    OracleParams p_;
    Expansion<Rational> weight_;
    Rational norm_;
    mutable std::map<std::vector<int>, Rational> avg_cache_;
};

/// Normalized average <phi>/<1> under the full generalized integrand.
Rational oracle_average(const Expansion<Rational>& phi, const OracleParams& p);
Poly oracle_average(const Expansion<Poly>& phi, const OracleParams& p);

// Three-term relations among the <phi_{i,j}>, evaluated for any
// 0 <= i, j <= n-1:
//   (a1+(n-j-1)t)(x2-x1) <phi_{i+1,j}>
//     = (a3+(n-i-1)t) <phi_{i,j+1}> + (a1+a2+(n+i-j-1)t) <phi_{i+1,j+1}>
//   (a1+a2+a3+(2n-j-2)t) <phi_{i,j+1}>
//     = (a1+a2+(n+i-j-1)t)(x3-x1) <phi_{i,j}> - (a2+i t)(x2-x1) <phi_{i+1,j}>
// The up relation is an identity exactly when i+j >= n-1 and the down
// relation exactly when i+j <= n-1 (the regimes where the monomial-count
// expansion behind them applies); outside those regimes the functions
// faithfully report the inequality.
bool check_three_term_up(int i, int j, const OracleParams& p);
bool check_three_term_down(int i, int j, const OracleParams& p);

constexpr bool three_term_up_admissible(int i, int j, int n) { return i + j >= n - 1; }
constexpr bool three_term_down_admissible(int i, int j, int n) { return i + j <= n - 1; }

/// The two iterated summation identities for 0 <= j <= k <= n (the k = j
/// case is the difference system itself).
bool check_corollary(int j, int k, const OracleParams& p);

/// Total-derivative identity <H1 + H2> = 0 built from orbit sums of the
/// (n-1)-variable interpolation polynomials with one coordinate deleted;
/// 0 <= i, j <= n-1.
bool check_H_vanishing(int i, int j, const OracleParams& p);

/// Brute-force moment polynomial <prod_i (x - z_i)^mu> at weight exponents
/// (a, b): expand against the interaction factor and average termwise.
/// Supported for n <= 3, tau <= 2, mu <= 4.
Poly oracle_moment_polynomial(int n, const Rational& a, const Rational& b, int tau, int mu);

/// Elementary-symmetric specialization: checks the closed form
///   <e_k((1-z)/z)> = C(n,k) (-1)^k (-b-(n-1)t; t)_k / (a-1; t)_k
/// and the companion identity expressing <phi_k> through that average at the
/// shifted weight. Requires a > k.
bool check_W2(int k, const Rational& a, const Rational& b, int tau, int n);

} // namespace selberg

#endif
