#include <doctest.h>

#include <cmath>
#include <random>

#include "selberg/selberg_integral.hpp"

using namespace selberg;

TEST_CASE("one-variable ratios are Beta identities") {
    // S_1(a+1,b)/S_1(a,b) = B(a+1,b)/B(a,b) = a/(a+b)
    SelbergParams p(rat(3, 2), rat(2), rat(1), 1);
    CHECK(selberg_ratio_alpha(p, 1) == rat(3, 7));
    CHECK(selberg_ratio_beta(p, 1) == rat(4, 7));
    CHECK(selberg_ratio_alpha(p, 0) == 1);
    CHECK(selberg_ratio_beta(p, 0) == 1);
}

TEST_CASE("two-variable ratio against the direct double integral") {
    // With integrand z1 z2 (z1-z2)^2 over [0,1]^2:
    //   S_2(2,1,1) = int z1 z2 (z1-z2)^2 = 1/36,  S_2(1,1,1) = int (z1-z2)^2 = 1/6.
    SelbergParams p(rat(1), rat(1), rat(1), 2);
    CHECK(selberg_ratio_alpha(p, 1) == rat(1, 6));
    CHECK(selberg_ratio_beta(p, 1) == rat(1, 6));  // symmetric case
}

TEST_CASE("telescoping consistency") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<long> nn(1, 5);
    std::uniform_int_distribution<long> mm(0, 3);
    for (int rep = 0; rep < 60; ++rep) {
        Rational a = rat(num(rng), den(rng));
        Rational b = rat(num(rng), den(rng));
        Rational t = rat(num(rng), den(rng));
        long n = nn(rng), m1 = mm(rng), m2 = mm(rng);
        SelbergParams p(a, b, t, n);
        SelbergParams shifted = SelbergParams::continued(a + m1, b, t, n);
        CHECK(selberg_ratio_alpha(p, m1 + m2) ==
              selberg_ratio_alpha(p, m1) * selberg_ratio_alpha(shifted, m2));
    }
}

TEST_CASE("numeric value") {
    CHECK(selberg_value_numeric(SelbergParams(rat(1), rat(1), rat(3, 2), 1)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(selberg_value_numeric(SelbergParams(rat(1), rat(1), rat(1), 2)) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    // Exact chain from (1,1,1,2): S(2,2,1) = S(1,1,1) * 1/6 * 1/10 = 1/360.
    CHECK(selberg_value_numeric(SelbergParams(rat(2), rat(2), rat(1), 2)) ==
          doctest::Approx(1.0 / 360.0).epsilon(1e-10));
}

TEST_CASE("numeric ratios agree with exact ratios") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(1, 6);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<long> nn(1, 4);
    std::uniform_int_distribution<long> mm(1, 3);
    for (int rep = 0; rep < 40; ++rep) {
        Rational a = rat(num(rng), den(rng));
        Rational b = rat(num(rng), den(rng));
        Rational t = rat(num(rng), den(rng));
        long n = nn(rng), m = mm(rng);
        SelbergParams p(a, b, t, n);
        double exact = selberg_ratio_alpha(p, m).get_d();
        double numeric = selberg_value_numeric(SelbergParams(a + m, b, t, n)) /
                         selberg_value_numeric(p);
        CHECK(std::abs(numeric / exact - 1.0) < 1e-8);
    }
}

TEST_CASE("positivity is enforced at construction, continuation is not") {
    CHECK_THROWS_AS(SelbergParams(rat(0), rat(1), rat(1), 2), std::invalid_argument);
    CHECK_THROWS_AS(SelbergParams(rat(1), rat(-1), rat(1), 2), std::invalid_argument);
    SelbergParams cont = SelbergParams::continued(rat(1), rat(-1), rat(1), 1);
    // denominator a+b = 0 in the first step
    CHECK_THROWS_AS(selberg_ratio_alpha(cont, 1), ParameterSingular);
}
