#include "selberg/matrices.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace selberg {

namespace {

bool admissible_coordinate(const Poly& x) {
    return x.is_constant() || x == Poly::indeterminate();
}

// Shifted factorial destined for a denominator: throws with the factor named.
Rational denom_poch(const Rational& base, const Rational& tau, long count,
                    const std::string& label) {
    Rational factor = base;
    for (long m = 0; m < count; ++m) {
        if (factor == 0)
            throw ParameterSingular("singular parameters: (" + label + "; tau)_" +
                                    std::to_string(count) + " vanishes at factor " + label + " + " +
                                    std::to_string(m) + "*tau = 0");
        factor += tau;
    }
    return poch(base, tau, count);
}

void require_constant(const GenericParams& p, const char* who) {
    if (!p.all_constant())
        throw std::invalid_argument(std::string(who) + " requires constant coordinates");
}

Rational constant_diff(const Poly& a, const Poly& b) { return (a - b).constant_value(); }

} // namespace

GenericParams::GenericParams(const Rational& a1, const Rational& a2, const Rational& a3,
                             const Rational& t, Poly x1_, Poly x2_, Poly x3_)
    : alpha1(a1), alpha2(a2), alpha3(a3), tau(t),
      x1(std::move(x1_)), x2(std::move(x2_)), x3(std::move(x3_)) {
    if (tau <= 0) throw std::invalid_argument("tau must be positive");
    if (!admissible_coordinate(x1) || !admissible_coordinate(x2) || !admissible_coordinate(x3))
        throw std::invalid_argument("each coordinate must be a constant or the indeterminate x");
    int symbolic = (x1.degree() == 1) + (x2.degree() == 1) + (x3.degree() == 1);
    if (symbolic > 1)
        throw std::invalid_argument("at most one coordinate may be the indeterminate");
    if ((x3 - x1).is_zero())
        throw std::invalid_argument("x3 - x1 must not vanish");
}

GenericParams::GenericParams(const Rational& a1, const Rational& a2, const Rational& a3,
                             const Rational& t, const Rational& x1_, const Rational& x2_,
                             const Rational& x3_)
    : GenericParams(a1, a2, a3, t, Poly(x1_), Poly(x2_), Poly(x3_)) {}

GenericParams GenericParams::with_coordinates_swapped() const {
    return GenericParams(alpha1, alpha3, alpha2, tau, x1, x3, x2);
}

MatrixR build_L(const GenericParams& p, int n) {
    require_constant(p, "build_L");
    const Rational r21 = constant_diff(p.x2, p.x1);
    const Rational r31 = constant_diff(p.x3, p.x1);
    MatrixR L(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j) {
            Rational num = poch(p.alpha2 + j * p.tau, p.tau, i - j);
            Rational den = denom_poch(p.alpha1 + p.alpha2 + 2 * j * p.tau, p.tau, i - j,
                                      "alpha1+alpha2+2*" + std::to_string(j) + "*tau");
            Rational sign = (i - j) % 2 == 0 ? 1 : -1;
            L(i, j) = sign * binomial(n - j, n - i) * num / den *
                      pow_rational(r21 / r31, i - j);
        }
    return L;
}

MatrixR build_D(const GenericParams& p, int n) {
    require_constant(p, "build_D");
    const Rational r21 = constant_diff(p.x2, p.x1);
    const Rational r31 = constant_diff(p.x3, p.x1);
    MatrixR D(n + 1);
    for (int j = 0; j <= n; ++j) {
        Rational num = poch(p.alpha1, p.tau, j) *
                       poch(p.alpha1 + p.alpha2 + 2 * j * p.tau, p.tau, n - j) *
                       pow_rational(r21, j) * pow_rational(r31, n - j);
        Rational den =
            denom_poch(p.alpha1 + p.alpha2 + (j - 1) * p.tau, p.tau, j,
                       "alpha1+alpha2+" + std::to_string(j - 1) + "*tau") *
            denom_poch(p.alpha1 + p.alpha2 + p.alpha3 + (n + j - 1) * p.tau, p.tau, n - j,
                       "alpha1+alpha2+alpha3+" + std::to_string(n + j - 1) + "*tau");
        D(j, j) = num / den;
    }
    return D;
}

MatrixR build_U(const GenericParams& p, int n) {
    require_constant(p, "build_U");
    MatrixR U(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Rational num = poch(p.alpha3 + (n - j) * p.tau, p.tau, j - i);
            Rational den = denom_poch(p.alpha1 + p.alpha2 + 2 * i * p.tau, p.tau, j - i,
                                      "alpha1+alpha2+2*" + std::to_string(i) + "*tau");
            Rational sign = (j - i) % 2 == 0 ? 1 : -1;
            U(i, j) = sign * binomial(j, i) * num / den;
        }
    return U;
}

MatrixR build_U_inverse(const GenericParams& p, int n) {
    require_constant(p, "build_U_inverse");
    MatrixR V(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Rational num = poch(p.alpha3 + (n - j) * p.tau, p.tau, j - i);
            Rational den = denom_poch(p.alpha1 + p.alpha2 + (j + i - 1) * p.tau, p.tau, j - i,
                                      "alpha1+alpha2+" + std::to_string(j + i - 1) + "*tau");
            V(i, j) = binomial(j, i) * num / den;
        }
    return V;
}

PrimedFactors build_primed(const GenericParams& p, int n) {
    require_constant(p, "build_primed");
    const Rational r21 = constant_diff(p.x2, p.x1);
    const Rational r31 = constant_diff(p.x3, p.x1);
    if (r21 == 0) throw ParameterSingular("singular parameters: x2 - x1 = 0 in the UL factors");
    MatrixR Up(n + 1), Dp(n + 1), Lp(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Rational num = poch(p.alpha3 + (n - j) * p.tau, p.tau, j - i);
            Rational den = denom_poch(p.alpha1 + p.alpha3 + 2 * (n - j) * p.tau, p.tau, j - i,
                                      "alpha1+alpha3+2*" + std::to_string(n - j) + "*tau");
            Rational sign = (j - i) % 2 == 0 ? 1 : -1;
            Up(i, j) = sign * binomial(j, i) * num / den * pow_rational(r31 / r21, j - i);
        }
    for (int j = 0; j <= n; ++j) {
        Rational num = poch(p.alpha1, p.tau, n - j) *
                       poch(p.alpha1 + p.alpha3 + 2 * (n - j) * p.tau, p.tau, j) *
                       pow_rational(r21, j) * pow_rational(r31, n - j);
        Rational den =
            denom_poch(p.alpha1 + p.alpha3 + (n - j - 1) * p.tau, p.tau, n - j,
                       "alpha1+alpha3+" + std::to_string(n - j - 1) + "*tau") *
            denom_poch(p.alpha1 + p.alpha2 + p.alpha3 + (2 * n - j - 1) * p.tau, p.tau, j,
                       "alpha1+alpha2+alpha3+" + std::to_string(2 * n - j - 1) + "*tau");
        Dp(j, j) = num / den;
    }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j) {
            Rational num = poch(p.alpha2 + j * p.tau, p.tau, i - j);
            Rational den = denom_poch(p.alpha1 + p.alpha3 + 2 * (n - i) * p.tau, p.tau, i - j,
                                      "alpha1+alpha3+2*" + std::to_string(n - i) + "*tau");
            Rational sign = (i - j) % 2 == 0 ? 1 : -1;
            Lp(i, j) = sign * binomial(n - j, n - i) * num / den;
        }
    return {std::move(Up), std::move(Dp), std::move(Lp)};
}

TildeSystem build_tilde(const GenericParams& p, int n) {
    require_constant(p, "build_tilde");
    const Rational r21 = constant_diff(p.x2, p.x1);
    const Rational r31 = constant_diff(p.x3, p.x1);
    MatrixR Ut(n + 1), Lt(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Ut(i, j) = binomial(j, i) *
                       poch(p.alpha1 + p.alpha2 + p.alpha3 + (n + j - 1) * p.tau, p.tau, n - j) *
                       poch(p.alpha3 + (n - j) * p.tau, p.tau, j - i) *
                       poch(p.alpha1 + p.alpha2 + (j - 1) * p.tau, p.tau, i);
        }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j) {
            Rational sign = (i - j) % 2 == 0 ? 1 : -1;
            Lt(i, j) = sign * binomial(n - j, n - i) * poch(p.alpha1, p.tau, j) *
                       poch(p.alpha2 + j * p.tau, p.tau, i - j) *
                       poch(p.alpha1 + p.alpha2 + (i + j) * p.tau, p.tau, n - i) *
                       pow_rational(r31, n - i) * pow_rational(r21, i);
        }
    return {std::move(Ut), std::move(Lt)};
}

MatrixR build_A_scalars(const Rational& a1, const Rational& a2, const Rational& a3,
                        const Rational& tau, int n) {
    // l and d with their coordinate monomials removed; u has none.
    std::vector<Rational> d_scal(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational num = poch(a1, tau, k) * poch(a1 + a2 + 2 * k * tau, tau, n - k);
        Rational den = denom_poch(a1 + a2 + (k - 1) * tau, tau, k,
                                  "alpha1+alpha2+" + std::to_string(k - 1) + "*tau") *
                       denom_poch(a1 + a2 + a3 + (n + k - 1) * tau, tau, n - k,
                                  "alpha1+alpha2+alpha3+" + std::to_string(n + k - 1) + "*tau");
        d_scal[k] = num / den;
    }
    MatrixR A(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            Rational sum(0);
            for (int k = 0; k <= std::min(i, j); ++k) {
                Rational l_num = poch(a2 + k * tau, tau, i - k);
                Rational l_den = denom_poch(a1 + a2 + 2 * k * tau, tau, i - k,
                                            "alpha1+alpha2+2*" + std::to_string(k) + "*tau");
                Rational l_sign = (i - k) % 2 == 0 ? 1 : -1;
                Rational l_scal = l_sign * binomial(n - k, n - i) * l_num / l_den;

                Rational u_num = poch(a3 + (n - j) * tau, tau, j - k);
                Rational u_den = denom_poch(a1 + a2 + 2 * k * tau, tau, j - k,
                                            "alpha1+alpha2+2*" + std::to_string(k) + "*tau");
                Rational u_sign = (j - k) % 2 == 0 ? 1 : -1;
                Rational u_val = u_sign * binomial(j, k) * u_num / u_den;

                sum += l_scal * d_scal[k] * u_val;
            }
            A(i, j) = sum;
        }
    return A;
}

MatrixP build_A(const GenericParams& p, int n) {
    MatrixR scal = build_A_scalars(p.alpha1, p.alpha2, p.alpha3, p.tau, n);
    const Poly f2 = p.x2 - p.x1;
    const Poly f3 = p.x3 - p.x1;
    std::vector<Poly> pw2(n + 1), pw3(n + 1);
    pw2[0] = Poly(Rational(1));
    pw3[0] = Poly(Rational(1));
    for (int i = 1; i <= n; ++i) {
        pw2[i] = pw2[i - 1] * f2;
        pw3[i] = pw3[i - 1] * f3;
    }
    MatrixP A(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) A(i, j) = pw2[i] * pw3[n - i] * scal(i, j);
    return A;
}

bool check_tilde_consistency(const GenericParams& p, int n) {
    require_constant(p, "check_tilde_consistency");
    MatrixR scal = build_A_scalars(p.alpha1, p.alpha2, p.alpha3, p.tau, n);
    const Rational r21 = constant_diff(p.x2, p.x1);
    const Rational r31 = constant_diff(p.x3, p.x1);
    MatrixR A(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            A(i, j) = scal(i, j) * pow_rational(r21, i) * pow_rational(r31, n - i);
    TildeSystem t = build_tilde(p, n);
    return A * t.u_tilde == t.l_tilde;
}

} // namespace selberg
