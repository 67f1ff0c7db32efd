#include "selberg/selberg_integral.hpp"

#include <cmath>
#include <stdexcept>

namespace selberg {

SelbergParams::SelbergParams(const Rational& alpha_, const Rational& beta_, const Rational& tau_,
                             long n_) {
    if (alpha_ <= 0 || beta_ <= 0 || tau_ <= 0)
        throw std::invalid_argument("Selberg parameters must be strictly positive");
    if (n_ < 1) throw std::invalid_argument("Selberg integral needs n >= 1");
    alpha = alpha_;
    beta = beta_;
    tau = tau_;
    n = n_;
}

SelbergParams SelbergParams::continued(const Rational& alpha_, const Rational& beta_,
                                       const Rational& tau_, long n_) {
    if (n_ < 1) throw std::invalid_argument("Selberg integral needs n >= 1");
    SelbergParams p;
    p.alpha = alpha_;
    p.beta = beta_;
    p.tau = tau_;
    p.n = n_;
    return p;
}

namespace {

// One alpha-step: (a; tau)_n / (a+b+(n-1)tau; tau)_n, denominator checked.
Rational alpha_step(const Rational& a, const Rational& b, const Rational& tau, long n) {
    Rational den_base = a + b + (n - 1) * tau;
    Rational factor = den_base;
    for (long i = 0; i < n; ++i) {
        if (factor == 0)
            throw ParameterSingular("Selberg recurrence denominator factor alpha+beta+" +
                                    std::to_string(n - 1 + i) + "*tau vanishes at alpha=" +
                                    fraction_string(a) + ", beta=" + fraction_string(b));
        factor += tau;
    }
    return poch(a, tau, n) / poch(den_base, tau, n);
}

} // namespace

Rational selberg_ratio_alpha(const SelbergParams& p, long m) {
    if (m < 0) throw std::invalid_argument("selberg_ratio_alpha requires m >= 0");
    Rational ratio(1);
    Rational a = p.alpha;
    for (long s = 0; s < m; ++s) {
        ratio *= alpha_step(a, p.beta, p.tau, p.n);
        a += 1;
    }
    return ratio;
}

Rational selberg_ratio_beta(const SelbergParams& p, long m) {
    return selberg_ratio_alpha(SelbergParams::continued(p.beta, p.alpha, p.tau, p.n), m);
}

double selberg_value_numeric(const SelbergParams& p) {
    if (p.alpha <= 0 || p.beta <= 0 || p.tau <= 0)
        throw std::invalid_argument("numeric Selberg value needs positive parameters");
    const double a = p.alpha.get_d();
    const double b = p.beta.get_d();
    const double t = p.tau.get_d();
    double log_value = 0.0;
    for (long j = 0; j < p.n; ++j) {
        log_value += std::lgamma(a + j * t);
        log_value += std::lgamma(b + j * t);
        log_value += std::lgamma(1.0 + (j + 1) * t);
        log_value -= std::lgamma(a + b + (p.n + j - 1) * t);
        log_value -= std::lgamma(1.0 + t);
    }
    return std::exp(log_value);
}

} // namespace selberg
