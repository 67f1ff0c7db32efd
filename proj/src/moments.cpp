#include "selberg/moments.hpp"

#include <string>
#include <utility>

#include "selberg/matrices.hpp"
#include "selberg/selberg_integral.hpp"

namespace selberg {

std::vector<Rational> initial_vector(long n, const Rational& alpha, const Rational& beta,
                                     const Rational& tau) {
    if (n < 1) throw std::invalid_argument("initial_vector needs n >= 1");
    // (alpha; tau)_k must be nonzero up to k = n; the k-th component carries
    // it in the denominator.
    {
        Rational factor = alpha;
        for (long m = 0; m < n; ++m) {
            if (factor == 0)
                throw ParameterSingular(
                    "singular starting vector: (alpha; tau)_k vanishes at factor alpha + " +
                    std::to_string(m) + "*tau = 0 (alpha = " + fraction_string(alpha) + ")");
            factor += tau;
        }
        Rational den = alpha + beta + (n - 1) * tau;
        for (long m = 0; m < n; ++m) {
            if (den == 0)
                throw ParameterSingular(
                    "singular starting vector: (alpha+beta+(n-1)tau; tau)_n vanishes at factor "
                    "alpha+beta+" + std::to_string(n - 1 + m) + "*tau = 0");
            den += tau;
        }
    }
    const Rational sign = n % 2 == 0 ? 1 : -1;
    const Rational common =
        sign * poch(alpha, tau, n) / poch(alpha + beta + (n - 1) * tau, tau, n);
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k)
        v[static_cast<std::size_t>(k)] =
            common * poch(-beta - (n - 1) * tau, tau, k) / poch(alpha, tau, k);
    return v;
}

std::vector<Poly> chain(long n, const Rational& alpha, const Rational& beta, const Rational& tau,
                        long mu) {
    if (mu < 0) throw std::invalid_argument("chain needs mu >= 0");
    std::vector<Rational> v0 = initial_vector(n, alpha, beta, tau);
    std::vector<Poly> v(v0.size());
    for (std::size_t k = 0; k < v0.size(); ++k) v[k] = Poly(v0[k]);
    if (mu == 0) return v;

    // Row i of every step matrix carries the fixed monomial
    // (x2-x1)^i (x3-x1)^(n-i) = (-x)^i (1-x)^(n-i); only the scalar part
    // changes from step to step. Keeping the monomials factored makes each
    // step O(n^2) polynomial operations.
    const Poly minus_x({Rational(0), Rational(-1)});
    const Poly one_minus_x({Rational(1), Rational(-1)});
    std::vector<Poly> row_monomial(v.size());
    for (long i = 0; i <= n; ++i)
        row_monomial[static_cast<std::size_t>(i)] =
            minus_x.pow(static_cast<int>(i)) * one_minus_x.pow(static_cast<int>(n - i));

    for (long step = 1; step <= mu; ++step) {
        MatrixR scal(static_cast<int>(n) + 1);
        try {
            scal = build_A_scalars(Rational(step), alpha, beta, tau, static_cast<int>(n));
        } catch (const ParameterSingular& e) {
            throw ParameterSingular("chain step " + std::to_string(step) + ": " + e.what());
        }
        std::vector<Poly> g(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) g[i] = v[i] * row_monomial[i];
        std::vector<Poly> w(v.size());
        for (long j = 0; j <= n; ++j) {
            Poly acc;
            for (long i = 0; i <= n; ++i) {
                const Rational& c = scal(static_cast<int>(i), static_cast<int>(j));
                if (c == 0) continue;
                acc += g[static_cast<std::size_t>(i)] * c;
            }
            w[static_cast<std::size_t>(j)] = std::move(acc);
        }
        v = std::move(w);
    }
    return v;
}

namespace {

void validate_request(const MomentRequest& req) {
    if (req.n < 1) throw std::invalid_argument("moment request needs n >= 1");
    if (req.mu < 1) throw std::invalid_argument("moment request needs mu >= 1");
    if (req.tau <= 0) throw ParameterSingular("moment request needs tau > 0");
    if (req.a <= 0 || req.b <= 0)
        throw ParameterSingular("moment request needs a > 0 and b > 0 for a convergent average");
}

} // namespace

MomentResult moment_polynomial(const MomentRequest& req) {
    validate_request(req);
    MomentResult result;
    result.request = req;
    const SelbergParams target(req.a, req.b, req.tau, req.n);
    const Rational e0_sign = (req.n * req.mu) % 2 == 0 ? 1 : -1;
    result.endpoint0 = e0_sign * selberg_ratio_alpha(target, req.mu);
    result.endpoint1 = selberg_ratio_beta(target, req.mu);

    const Rational alpha = req.a - 1;
    const Rational& beta = req.b;
    try {
        std::vector<Poly> w = chain(req.n, alpha, beta, req.tau, req.mu);
        // The chain output is (-1)^(n(mu-1)) S(alpha+1,beta)/S(alpha,beta)
        // times the wanted average at first exponent alpha+1 = a.
        Rational prefactor =
            poch(alpha, req.tau, req.n) / poch(alpha + beta + (req.n - 1) * req.tau, req.tau, req.n);
        if ((req.n * (req.mu - 1)) % 2 != 0) prefactor = -prefactor;
        result.poly = w[0] / prefactor;
    } catch (const ParameterSingular&) {
        if (req.mu != 1) throw;
        // The shifted starting vector is singular but the mu = 1 average has
        // a direct terminating-series evaluation at the target exponents.
        result.poly = closed_form_mu1(req.n, req.a, req.b, req.tau);
    }
    return result;
}

Poly gauss_2f1_terminating(long neg_n, const Rational& b, const Rational& c) {
    if (neg_n > 0) throw std::invalid_argument("gauss_2f1_terminating needs a nonpositive first parameter");
    const long depth = -neg_n;
    std::vector<Rational> coeffs(static_cast<std::size_t>(depth) + 1, Rational(0));
    Rational term(1);
    coeffs[0] = term;
    for (long k = 1; k <= depth; ++k) {
        const Rational c_factor = c + (k - 1);
        if (c_factor == 0)
            throw ParameterSingular("terminating 2F1: denominator factor c + " +
                                    std::to_string(k - 1) + " = 0 with c = " + fraction_string(c));
        term *= Rational(neg_n + (k - 1)) * (b + (k - 1)) / (c_factor * k);
        coeffs[static_cast<std::size_t>(k)] = term;
    }
    return Poly(std::move(coeffs));
}

Poly closed_form_mu1(long n, const Rational& a, const Rational& b, const Rational& tau) {
    if (n < 1) throw std::invalid_argument("closed_form_mu1 needs n >= 1");
    if (tau <= 0 || a <= 0 || b <= 0)
        throw ParameterSingular("closed_form_mu1 needs positive a, b, tau");
    Rational den = poch(a + b + (n - 1) * tau, tau, n);
    if (den == 0)
        throw ParameterSingular("closed_form_mu1: (a+b+(n-1)tau; tau)_n vanishes");
    Rational scale = poch(a, tau, n) / den;
    if (n % 2 != 0) scale = -scale;
    Poly series = gauss_2f1_terminating(-n, (a + b) / tau + (n - 1), a / tau);
    return series * scale;
}

} // namespace selberg
