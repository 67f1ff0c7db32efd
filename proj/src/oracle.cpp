#include "selberg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "selberg/selberg_integral.hpp"

namespace selberg {

namespace {

Expansion<Rational> linear_term(int nvars, const Rational& c0, int var, const Rational& c1) {
    Expansion<Rational> e(nvars);
    std::vector<int> mono(static_cast<std::size_t>(nvars), 0);
    e.add_term(mono, c0);
    mono[static_cast<std::size_t>(var)] = 1;
    e.add_term(mono, c1);
    return e;
}

} // namespace

OracleParams::OracleParams(int n_, int tau_, int alpha1_, const Rational& alpha2_,
                           const Rational& alpha3_, const Rational& x1_)
    : n(n_), tau(tau_), alpha1(alpha1_), alpha2(alpha2_), alpha3(alpha3_), x1(x1_) {
    if (n < 1 || n > 3) throw std::invalid_argument("oracle supports 1 <= n <= 3");
    if (tau < 1 || tau > 3) throw std::invalid_argument("oracle supports integer 1 <= tau <= 3");
    if (alpha1 < 1) throw std::invalid_argument("oracle needs integer alpha1 >= 1");
    if (alpha2 <= 0 || alpha3 <= 0) throw std::invalid_argument("oracle needs alpha2, alpha3 > 0");
    if (alpha1 % 2 == 0 && x1 > 0 && x1 < 1)
        throw std::invalid_argument("x1 inside (0,1) needs odd alpha1 for a sign-definite factor");
}

Expansion<Rational> expand_vandermonde_power(int n, int tau) {
    if (n < 1 || n > 3 || tau < 1 || tau > 3)
        throw ExpansionLimit("interaction expansion restricted to 1 <= n <= 3, 1 <= tau <= 3");
    Expansion<Rational> w = Expansion<Rational>::one(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Expansion<Rational> diff(n);
            std::vector<int> mono(static_cast<std::size_t>(n), 0);
            mono[static_cast<std::size_t>(a)] = 1;
            diff.add_term(mono, Rational(1));
            mono[static_cast<std::size_t>(a)] = 0;
            mono[static_cast<std::size_t>(b)] = 1;
            diff.add_term(mono, Rational(-1));
            for (int rep = 0; rep < 2 * tau; ++rep) w = w * diff;
        }
    return w;
}

Rational monomial_average(const std::vector<int>& exponents, const Rational& a2,
                          const Rational& a3) {
    if (a3 <= 0) throw DivergentIntegral("monomial average needs a3 > 0");
    Rational result(1);
    for (int c : exponents) {
        if (a2 + c <= 0)
            throw DivergentIntegral("monomial average diverges: a2 + " + std::to_string(c) +
                                    " <= 0 with a2 = " + fraction_string(a2));
        result *= poch(a2, 1, c) / poch(a2 + a3, 1, c);
    }
    return result;
}

Expansion<Rational> interpolation_poly(int nvars, PhiIndex idx, const Rational& x1) {
    if (idx.i < 0 || idx.j < 0 || idx.i > nvars || idx.j > nvars)
        throw std::invalid_argument("interpolation index out of range");
    Expansion<Rational> e = Expansion<Rational>::one(nvars);
    for (int l = 0; l < idx.j; ++l) e = e * linear_term(nvars, -x1, l, Rational(1));
    for (int l = 0; l < nvars - idx.i; ++l) e = e * linear_term(nvars, Rational(0), l, Rational(-1));
    for (int l = nvars - idx.i; l < nvars; ++l)
        e = e * linear_term(nvars, Rational(1), l, Rational(-1));
    return e;
}

OracleEvaluator::OracleEvaluator(const OracleParams& p)
    : p_(p), weight_(Expansion<Rational>::one(p.n)), norm_(0) {
    Expansion<Rational> w = expand_vandermonde_power(p.n, p.tau);
    for (int v = 0; v < p.n; ++v) {
        Expansion<Rational> factor = linear_term(p.n, p.x1, v, Rational(-1));
        for (int rep = 0; rep < p.alpha1 - 1; ++rep) w = w * factor;
    }
    // (x1 - z)^(alpha1-1) is negative on (0,1) when x1 <= 0 and the power is
    // odd; restore the absolute-value convention.
    if (p.alpha1 % 2 == 0 && p.x1 <= 0 && p.n % 2 == 1) w = w * Rational(-1);
    weight_ = std::move(w);
    norm_ = raw_scaled(Expansion<Rational>::one(p.n));
    if (norm_ == 0) throw std::logic_error("oracle weight integrated to zero");
}

Rational OracleEvaluator::raw_scaled(const Expansion<Rational>& phi) const {
    if (phi.nvars() != p_.n) throw std::invalid_argument("expansion arity mismatch");
    // Pairwise against the cached weight terms, without materializing the
    // product expansion.
    Rational sum(0);
    std::vector<int> mono(static_cast<std::size_t>(p_.n));
    for (const auto& [mp, cp] : phi.terms())
        for (const auto& [mw, cw] : weight_.terms()) {
            for (std::size_t v = 0; v < mono.size(); ++v) mono[v] = mp[v] + mw[v];
            sum += cp * cw * cached_average(mono);
        }
    return sum;
}

Poly OracleEvaluator::raw_scaled(const Expansion<Poly>& phi) const {
    if (phi.nvars() != p_.n) throw std::invalid_argument("expansion arity mismatch");
    Poly sum;
    std::vector<int> mono(static_cast<std::size_t>(p_.n));
    for (const auto& [mp, cp] : phi.terms())
        for (const auto& [mw, cw] : weight_.terms()) {
            for (std::size_t v = 0; v < mono.size(); ++v) mono[v] = mp[v] + mw[v];
            sum += cp * Rational(cw * cached_average(mono));
        }
    return sum;
}

const Rational& OracleEvaluator::cached_average(const std::vector<int>& mono) const {
    auto it = avg_cache_.find(mono);
    if (it == avg_cache_.end())
        it = avg_cache_.emplace(mono, monomial_average(mono, p_.alpha2, p_.alpha3)).first;
    return it->second;
}

Rational OracleEvaluator::average(const Expansion<Rational>& phi) const {
    return raw_scaled(phi) / norm_;
}

Poly OracleEvaluator::average(const Expansion<Poly>& phi) const {
    return raw_scaled(phi) / norm_;
}

Rational oracle_average(const Expansion<Rational>& phi, const OracleParams& p) {
    return OracleEvaluator(p).average(phi);
}

Poly oracle_average(const Expansion<Poly>& phi, const OracleParams& p) {
    return OracleEvaluator(p).average(phi);
}

bool check_three_term_up(int i, int j, const OracleParams& p) {
    if (i < 0 || j < 0 || i > p.n - 1 || j > p.n - 1)
        throw std::invalid_argument("three-term indices need 0 <= i, j <= n-1");
    OracleEvaluator ev(p);
    const int n = p.n;
    const Rational t(p.tau), a1(p.alpha1);
    const Rational x2_m_x1 = -p.x1;
    Rational up_left = ev.average(interpolation_poly(n, {i + 1, j}, p.x1));
    Rational mid = ev.average(interpolation_poly(n, {i, j + 1}, p.x1));
    Rational both = ev.average(interpolation_poly(n, {i + 1, j + 1}, p.x1));
    Rational lhs = (a1 + (n - j - 1) * t) * x2_m_x1 * up_left;
    Rational rhs = (p.alpha3 + (n - i - 1) * t) * mid + (a1 + p.alpha2 + (n + i - j - 1) * t) * both;
    return lhs == rhs;
}

bool check_three_term_down(int i, int j, const OracleParams& p) {
    if (i < 0 || j < 0 || i > p.n - 1 || j > p.n - 1)
        throw std::invalid_argument("three-term indices need 0 <= i, j <= n-1");
    OracleEvaluator ev(p);
    const int n = p.n;
    const Rational t(p.tau), a1(p.alpha1);
    const Rational x2_m_x1 = -p.x1;
    const Rational x3_m_x1 = Rational(1) - p.x1;
    Rational base = ev.average(interpolation_poly(n, {i, j}, p.x1));
    Rational mid = ev.average(interpolation_poly(n, {i, j + 1}, p.x1));
    Rational up_left = ev.average(interpolation_poly(n, {i + 1, j}, p.x1));
    Rational lhs = (a1 + p.alpha2 + p.alpha3 + (2 * n - j - 2) * t) * mid;
    Rational rhs = (a1 + p.alpha2 + (n + i - j - 1) * t) * x3_m_x1 * base -
                   (p.alpha2 + i * t) * x2_m_x1 * up_left;
    return lhs == rhs;
}

bool check_corollary(int j, int k, const OracleParams& p) {
    const int n = p.n;
    if (j < 0 || j > k || k > n) throw std::invalid_argument("corollary indices need 0 <= j <= k <= n");
    OracleEvaluator ev(p);
    const Rational t(p.tau), a1(p.alpha1);
    const Rational& a2 = p.alpha2;
    const Rational& a3 = p.alpha3;
    const Rational x2_m_x1 = -p.x1;
    const Rational x3_m_x1 = Rational(1) - p.x1;

    Rational lhs_up = poch(a1 + (k - j) * t, t, j) * pow_rational(x2_m_x1, j) *
                      ev.average(interpolation_poly(n, {k, n - k}, p.x1));
    Rational rhs_up(0);
    for (int i = 0; i <= j; ++i)
        rhs_up += binomial(j, i) * poch(a3 + (n - k) * t, t, j - i) *
                  poch(a1 + a2 + (2 * k - j - 1) * t, t, i) *
                  ev.average(interpolation_poly(n, {i + k - j, n - k + j}, p.x1));
    if (lhs_up != rhs_up) return false;

    Rational lhs_down = poch(a1 + a2 + a3 + (n + j - 1) * t, t, n - k) *
                        ev.average(interpolation_poly(n, {j, n - j}, p.x1));
    Rational rhs_down(0);
    for (int i = k; i <= n; ++i) {
        Rational sign = (i - k) % 2 == 0 ? 1 : -1;
        rhs_down += sign * binomial(n - k, n - i) * poch(a1 + a2 + (i + 2 * j - k) * t, t, n - i) *
                    poch(a2 + j * t, t, i - k) * pow_rational(x3_m_x1, n - i) *
                    pow_rational(x2_m_x1, i - k) *
                    ev.average(interpolation_poly(n, {i - k + j, k - j}, p.x1));
    }
    return lhs_down == rhs_down;
}

namespace {

// Sum of phi_{i,j} over all permutations of its variables (counted with
// multiplicity over the group, not the orbit set).
Expansion<Rational> orbit_sum(int m, PhiIndex idx, const Rational& x1) {
    Expansion<Rational> base = interpolation_poly(m, idx, x1);
    Expansion<Rational> sum(m);
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        sum += base.permuted(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

} // namespace

bool check_H_vanishing(int i, int j, const OracleParams& p) {
    const int n = p.n;
    if (i < 0 || j < 0 || i > n - 1 || j > n - 1)
        throw std::invalid_argument("orbit-sum indices need 0 <= i, j <= n-1");
    OracleEvaluator ev(p);
    const Rational t(p.tau), a1(p.alpha1);
    const Rational& a2 = p.alpha2;
    const Rational& a3 = p.alpha3;

    Expansion<Rational> s = orbit_sum(n - 1, {i, j}, p.x1);
    std::vector<Expansion<Rational>> inserted;
    inserted.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) inserted.push_back(s.with_inserted_var(k));

    Expansion<Rational> h1(n);
    for (int k = 0; k < n; ++k) {
        Expansion<Rational> quad =
            linear_term(n, Rational(0), k, Rational(-1)) * linear_term(n, Rational(1), k, Rational(-1)) * a1 +
            linear_term(n, p.x1, k, Rational(-1)) * linear_term(n, Rational(1), k, Rational(-1)) * a2 +
            linear_term(n, p.x1, k, Rational(-1)) * linear_term(n, Rational(0), k, Rational(-1)) * a3;
        h1 -= quad * inserted[static_cast<std::size_t>(k)];
    }

    Expansion<Rational> h2(n);
    std::vector<Expansion<Rational>> cubes;
    cubes.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        cubes.push_back(linear_term(n, p.x1, k, Rational(-1)) *
                        linear_term(n, Rational(0), k, Rational(-1)) *
                        linear_term(n, Rational(1), k, Rational(-1)) *
                        inserted[static_cast<std::size_t>(k)]);
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            Expansion<Rational> q = (cubes[static_cast<std::size_t>(k)] -
                                     cubes[static_cast<std::size_t>(l)])
                                        .divided_by_var_diff(k, l);
            h2 += q * (2 * t);
        }

    return ev.raw_scaled(h1 + h2) == 0;
}

Poly oracle_moment_polynomial(int n, const Rational& a, const Rational& b, int tau, int mu) {
    if (n < 1 || n > 3 || tau < 1 || tau > 2 || mu < 1 || mu > 4)
        throw ExpansionLimit("brute-force moment restricted to n <= 3, tau <= 2, mu <= 4");
    Expansion<Poly> phi = Expansion<Poly>::one(n);
    for (int v = 0; v < n; ++v) {
        Expansion<Poly> factor(n);
        std::vector<int> mono(static_cast<std::size_t>(n), 0);
        factor.add_term(mono, Poly::indeterminate());
        mono[static_cast<std::size_t>(v)] = 1;
        factor.add_term(mono, Poly(-1));
        for (int rep = 0; rep < mu; ++rep) phi = phi * factor;
    }
    // alpha1 = 1 removes the |x1 - z| factor, leaving the plain weight with
    // exponents (a, b).
    OracleParams p(n, tau, 1, a, b, rat(2));
    return oracle_average(phi, p);
}

bool check_W2(int k, const Rational& a, const Rational& b, int tau, int n) {
    if (n < 1 || n > 3 || tau < 1 || tau > 3 || k < 0 || k > n)
        throw std::invalid_argument("check_W2 needs 0 <= k <= n <= 3 and integer 1 <= tau <= 3");
    if (!(a > k)) throw DivergentIntegral("e_k average needs a > k");
    const Rational t(tau);
    Expansion<Rational> w = expand_vandermonde_power(n, tau);

    auto sharp_average = [&](const Expansion<Rational>& phi, const Rational& aa) -> Rational {
        Expansion<Rational> e = phi * w;
        Rational num(0), den(0);
        for (const auto& [mono, coef] : e.terms()) num += coef * monomial_average(mono, aa, b);
        for (const auto& [mono, coef] : w.terms()) den += coef * monomial_average(mono, aa, b);
        return num / den;
    };
    auto closed_form = [&](const Rational& aa) -> Rational {
        Rational sign = k % 2 == 0 ? 1 : -1;
        return binomial(n, k) * sign * poch(-b - (n - 1) * t, t, k) / poch(aa - 1, t, k);
    };

    // e_k over the variables (1 - z_i)/z_i = z_i^{-1} - 1.
    Expansion<Rational> ek(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        Expansion<Rational> term = Expansion<Rational>::one(n);
        for (int v = 0; v < n; ++v) {
            if (!((mask >> v) & 1u)) continue;
            Expansion<Rational> f(n);
            std::vector<int> mono(static_cast<std::size_t>(n), 0);
            mono[static_cast<std::size_t>(v)] = -1;
            f.add_term(mono, Rational(1));
            mono[static_cast<std::size_t>(v)] = 0;
            f.add_term(mono, Rational(-1));
            term = term * f;
        }
        ek += term;
    }

    if (sharp_average(ek, a) != closed_form(a)) return false;

    // phi_k expressed through the shifted e_k average:
    //   <phi_k> = (-1)^(n-k) C(n,k)^{-1} (S(a+1,b)/S(a,b)) <e_k>|_{a -> a+1}.
    Rational lhs = sharp_average(interpolation_poly(n, {k, 0}, Rational(0)), a);
    Rational ratio = selberg_ratio_alpha(SelbergParams(a, b, t, n), 1);
    Rational sign = (n - k) % 2 == 0 ? 1 : -1;
    Rational rhs = sign * ratio * sharp_average(ek, a + 1) / binomial(n, k);
    return lhs == rhs;
}

} // namespace selberg
