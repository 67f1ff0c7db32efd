#include <doctest.h>

#include "selberg/matrices.hpp"
#include "selberg/moments.hpp"
#include "selberg/oracle.hpp"

using namespace selberg;

namespace {

std::vector<int> mono(std::initializer_list<int> e) { return std::vector<int>(e); }

} // namespace

TEST_CASE("interaction factor expansions") {
    Expansion<Rational> v1 = expand_vandermonde_power(1, 3);
    REQUIRE(v1.term_count() == 1);
    CHECK(v1.terms().at(mono({0})) == 1);  // empty pair product, constant 1

    Expansion<Rational> v2 = expand_vandermonde_power(2, 1);  // (z1-z2)^2
    CHECK(v2.term_count() == 3);
    CHECK(v2.terms().at(mono({2, 0})) == 1);
    CHECK(v2.terms().at(mono({1, 1})) == -2);
    CHECK(v2.terms().at(mono({0, 2})) == 1);

    Expansion<Rational> v4 = expand_vandermonde_power(2, 2);  // (z1-z2)^4
    CHECK(v4.terms().at(mono({2, 2})) == 6);

    CHECK_THROWS_AS(expand_vandermonde_power(4, 1), ExpansionLimit);
    CHECK_THROWS_AS(expand_vandermonde_power(2, 4), ExpansionLimit);
}

TEST_CASE("expansion term budget") {
    Expansion<Rational> small(2, 4);
    std::vector<int> e(2, 0);
    for (int i = 0; i < 4; ++i) {
        e[0] = i;
        small.add_term(e, Rational(1));
    }
    e[0] = 9;
    CHECK_THROWS_AS(small.add_term(e, Rational(1)), ExpansionLimit);
}

TEST_CASE("division by a variable difference") {
    // (z0^2 - z1^2)/(z0 - z1) = z0 + z1
    Expansion<Rational> p(2);
    p.add_term(mono({2, 0}), Rational(1));
    p.add_term(mono({0, 2}), Rational(-1));
    Expansion<Rational> q = p.divided_by_var_diff(0, 1);
    Expansion<Rational> expected(2);
    expected.add_term(mono({1, 0}), Rational(1));
    expected.add_term(mono({0, 1}), Rational(1));
    CHECK(q == expected);

    Expansion<Rational> bad(2);
    bad.add_term(mono({1, 0}), Rational(1));  // z0 alone is not divisible
    CHECK_THROWS_AS(bad.divided_by_var_diff(0, 1), std::logic_error);
}

TEST_CASE("product-Beta monomial averages") {
    CHECK(monomial_average(mono({1}), rat(1), rat(1)) == rat(1, 2));
    CHECK(monomial_average(mono({2}), rat(2), rat(2)) == rat(3, 10));  // (2*3)/(4*5)
    CHECK(monomial_average(mono({-1}), rat(2), rat(1)) == 2);
    CHECK(monomial_average(mono({1, 2}), rat(1), rat(1)) == rat(1, 2) * rat(1, 3));
    CHECK_THROWS_AS(monomial_average(mono({-2}), rat(2), rat(1)), DivergentIntegral);
    CHECK_THROWS_AS(monomial_average(mono({0}), rat(1), rat(0)), DivergentIntegral);
}

TEST_CASE("normalized averages") {
    OracleParams p(2, 1, 1, rat(1), rat(1), rat(2));
    CHECK(oracle_average(Expansion<Rational>::one(2), p) == 1);
    // <z1 z2> under (z1-z2)^2: (1/36)/(1/6)
    Expansion<Rational> z1z2(2);
    z1z2.add_term(mono({1, 1}), Rational(1));
    CHECK(oracle_average(z1z2, p) == rat(1, 6));
}

TEST_CASE("averages are invariant under variable permutation") {
    OracleParams p(3, 1, 2, rat(2), rat(3), rat(-1));
    OracleEvaluator ev(p);
    Expansion<Rational> phi(3);
    phi.add_term(mono({2, 1, 0}), rat(3, 2));
    phi.add_term(mono({0, 0, 1}), rat(-1, 3));
    Rational base = ev.average(phi);
    CHECK(base == ev.average(phi.permuted({1, 2, 0})));
    CHECK(base == ev.average(phi.permuted({2, 0, 1})));
}

TEST_CASE("one-variable interpolation averages by direct integration") {
    // alpha = (2,2,2), x1 = -1, weight (1+z) z (1-z) dz on [0,1]:
    //   <phi_{1,0}> = 7/60, <phi_{0,1}> = -13/60, <phi_{1,1}> = 1/6, <1> = 1/4.
    OracleParams p(1, 1, 2, rat(2), rat(2), rat(-1));
    OracleEvaluator ev(p);
    const Rational beta22 = rat(1, 6);  // B(2,2), restores true scale
    Rational raw10 = ev.raw_scaled(interpolation_poly(1, {1, 0}, p.x1)) * beta22;
    Rational raw01 = ev.raw_scaled(interpolation_poly(1, {0, 1}, p.x1)) * beta22;
    Rational raw11 = ev.raw_scaled(interpolation_poly(1, {1, 1}, p.x1)) * beta22;
    CHECK(raw10 == rat(7, 60));
    CHECK(raw01 == rat(-13, 60));
    CHECK(raw11 == rat(1, 6));
    CHECK(ev.raw_scaled(Expansion<Rational>::one(1)) * beta22 == rat(1, 4));
    CHECK(ev.average(interpolation_poly(1, {1, 0}, p.x1)) == rat(7, 15));

    // Three-term relation at the unnormalized scale: both sides 7/30.
    Rational lhs = (rat(2) + 0) * (Rational(0) - p.x1) * raw10;
    Rational rhs = (rat(2) + 0) * raw01 + (rat(4) + 0) * raw11;
    CHECK(lhs == rat(7, 30));
    CHECK(rhs == rat(7, 30));
    CHECK(check_three_term_up(0, 0, p));
    CHECK(check_three_term_down(0, 0, p));
}

TEST_CASE("three-term relations hold exactly on their index regimes") {
    // The up relation is valid for i+j >= n-1 and the down relation for
    // i+j <= n-1. Outside those ranges the relations genuinely fail: at
    // n = 2, alpha = (2,2,2), tau = 1, x1 = -1 the up residual at (0,0)
    // is 13/3360 by direct double integration, and the checks report that.
    std::vector<OracleParams> tuples = {
        OracleParams(2, 1, 2, rat(2), rat(2), rat(-1)),
        OracleParams(2, 2, 3, rat(5, 2), rat(7, 2), rat(2)),
        OracleParams(3, 1, 1, rat(2), rat(3), rat(-1)),
    };
    for (const OracleParams& p : tuples)
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j) {
                CHECK(check_three_term_up(i, j, p) == three_term_up_admissible(i, j, p.n));
                CHECK(check_three_term_down(i, j, p) == three_term_down_admissible(i, j, p.n));
            }
    CHECK_THROWS_AS(check_three_term_up(2, 0, tuples[0]), std::invalid_argument);
}

TEST_CASE("summation identities on sample tuples") {
    OracleParams p(2, 1, 2, rat(2), rat(2), rat(-1));
    for (int j = 0; j <= 2; ++j)
        for (int k = j; k <= 2; ++k) CHECK(check_corollary(j, k, p));
    OracleParams p3(3, 1, 2, rat(2), rat(3), rat(-1));
    CHECK(check_corollary(1, 2, p3));
}

TEST_CASE("orbit-sum total-derivative identity") {
    OracleParams p1(1, 1, 2, rat(2), rat(2), rat(-1));
    CHECK(check_H_vanishing(0, 0, p1));  // no pair term at n = 1
    OracleParams p2(2, 1, 2, rat(2), rat(2), rat(-1));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(check_H_vanishing(i, j, p2));
    OracleParams p3(3, 1, 2, rat(2), rat(2), rat(-1));
    CHECK(check_H_vanishing(1, 1, p3));
}

TEST_CASE("averages with a spectator indeterminate") {
    // <x - z> at weight z(1-z): x - 1/2.
    OracleParams p(1, 1, 1, rat(2), rat(2), rat(2));
    Expansion<Poly> phi(1);
    phi.add_term({0}, Poly::indeterminate());
    phi.add_term({1}, Poly(-1));
    CHECK(oracle_average(phi, p) == Poly({rat(-1, 2), rat(1)}));
}

TEST_CASE("brute-force moments") {
    CHECK(oracle_moment_polynomial(1, rat(2), rat(2), 1, 2) ==
          Poly({rat(3, 10), rat(-1), rat(1)}));
    CHECK(oracle_moment_polynomial(2, rat(1), rat(1), 1, 1) ==
          Poly({rat(1, 6), rat(-1), rat(1)}));
    for (int n : {1, 2, 3})
        for (int tau : {1, 2})
            CHECK(oracle_moment_polynomial(n, rat(2), rat(3), tau, 1) ==
                  closed_form_mu1(n, rat(2), rat(3), rat(tau)));
    CHECK_THROWS_AS(oracle_moment_polynomial(4, rat(2), rat(2), 1, 1), ExpansionLimit);
    CHECK_THROWS_AS(oracle_moment_polynomial(2, rat(2), rat(2), 3, 1), ExpansionLimit);
}

TEST_CASE("starting vector against brute-force interpolation averages") {
    for (int n : {1, 2, 3})
        for (int tau : {1, 2})
            for (const auto& [a, b] :
                 std::vector<std::pair<Rational, Rational>>{{rat(2), rat(2)}, {rat(5, 2), rat(7, 2)}}) {
                OracleParams p(n, tau, 1, a, b, rat(2));
                OracleEvaluator ev(p);
                auto v = initial_vector(n, a, b, rat(tau));
                for (int k = 0; k <= n; ++k)
                    CHECK(v[static_cast<std::size_t>(k)] ==
                          ev.average(interpolation_poly(n, {k, 0}, p.x1)));
            }
}

TEST_CASE("difference matrix action against brute-force averages") {
    // The one-step system itself: inserting prod_l (z_l - x1) maps the
    // interpolation-average vector through A, i.e.
    //   <phi_{j,n}> = sum_i <phi_{i,0}> A[i][j].
    // Hand anchor at n=1, alpha=(2,2,2), x1=-1: (-8/15)(4/3) + (7/15)(-1/3)
    // = -13/15 = <phi_{0,1}>.
    for (int n : {1, 2, 3})
        for (int tau : {1, 2})
            for (int a1 : {1, 2})
                for (const Rational& x1 : {rat(-1), rat(2)}) {
                    OracleParams p(n, tau, a1, rat(2), rat(5, 2), x1);
                    OracleEvaluator ev(p);
                    GenericParams gp(rat(a1), rat(2), rat(5, 2), rat(tau), Poly(x1),
                                     Poly(rat(0)), Poly(rat(1)));
                    MatrixP A = build_A(gp, n);
                    std::vector<Rational> base, shifted;
                    for (int i = 0; i <= n; ++i) {
                        base.push_back(ev.average(interpolation_poly(n, {i, 0}, x1)));
                        shifted.push_back(ev.average(interpolation_poly(n, {i, n}, x1)));
                    }
                    for (int j = 0; j <= n; ++j) {
                        Rational acc(0);
                        for (int i = 0; i <= n; ++i)
                            acc += base[static_cast<std::size_t>(i)] *
                                   A(i, j).constant_value();
                        CHECK(acc == shifted[static_cast<std::size_t>(j)]);
                    }
                }
}

TEST_CASE("elementary-symmetric averages") {
    // n = 1, a = 3, b = 2: <(1-z)/z> = <z^{-1}> - 1 = 2 - 1 = 1, and the
    // closed form gives -(-b)/(a-1) = 1.
    CHECK(monomial_average(mono({-1}), rat(3), rat(2)) == 2);
    CHECK(check_W2(1, rat(3), rat(2), 1, 1));
    CHECK(check_W2(0, rat(3), rat(2), 1, 2));  // both sides 1
    CHECK(check_W2(1, rat(3), rat(2), 1, 2));
    CHECK(check_W2(2, rat(3), rat(2), 2, 2));
    CHECK_THROWS_AS(check_W2(3, rat(3), rat(2), 1, 3), DivergentIntegral);  // needs a > k
}

TEST_CASE("oracle parameter validation") {
    CHECK_THROWS_AS(OracleParams(0, 1, 1, rat(1), rat(1), rat(2)), std::invalid_argument);
    CHECK_THROWS_AS(OracleParams(2, 0, 1, rat(1), rat(1), rat(2)), std::invalid_argument);
    CHECK_THROWS_AS(OracleParams(2, 1, 0, rat(1), rat(1), rat(2)), std::invalid_argument);
    CHECK_THROWS_AS(OracleParams(2, 1, 1, rat(0), rat(1), rat(2)), std::invalid_argument);
    // even alpha1 with x1 inside (0,1) is not sign-definite
    CHECK_THROWS_AS(OracleParams(2, 1, 2, rat(1), rat(1), rat(1, 2)), std::invalid_argument);
    // odd alpha1 makes the power even, any x1 works
    OracleParams ok(2, 1, 3, rat(1), rat(1), rat(1, 2));
    CHECK(oracle_average(Expansion<Rational>::one(2), ok) == 1);
}
