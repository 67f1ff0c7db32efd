#include <doctest.h>

#include <random>

#include "selberg/poly.hpp"

using namespace selberg;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (Rational& x : c) x = rat(num(rng), den(rng));
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("ring operations") {
    const Poly x = Poly::indeterminate();
    Poly one_plus_x({rat(1), rat(1)});
    Poly one_minus_x({rat(1), rat(-1)});
    CHECK(one_plus_x * one_minus_x == Poly({rat(1), rat(0), rat(-1)}));  // 1 - x^2
    Poly p({rat(3, 10), rat(-1), rat(1)});
    CHECK(p + Poly() == p);
    CHECK((x * x - x) * rat(1, 2) == Poly({rat(0), rat(-1, 2), rat(1, 2)}));
}

TEST_CASE("normalization strips trailing zeros") {
    Poly x = Poly::indeterminate();
    Poly z = x - x;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(Poly({rat(1), rat(2), rat(0), rat(0)}).degree() == 1);
}

TEST_CASE("degree is additive for nonzero products") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        Poly p = random_poly(rng, 5);
        Poly q = random_poly(rng, 5);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("evaluation") {
    Poly p({rat(3, 10), rat(-1), rat(1)});  // x^2 - x + 3/10
    CHECK(p.eval(rat(0)) == rat(3, 10));
    CHECK(p.eval(rat(1)) == rat(3, 10));
    CHECK(p.eval(rat(1, 2)) == rat(1, 20));
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    for (int rep = 0; rep < 100; ++rep) {
        Poly p = random_poly(rng, 4);
        Poly q = random_poly(rng, 4);
        Rational at = rat(num(rng), den(rng));
        CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
        CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
    }
}

TEST_CASE("reflection x -> 1-x") {
    Poly x = Poly::indeterminate();
    CHECK(x.reflected() == Poly({rat(1), rat(-1)}));
    Poly p({rat(3, 10), rat(-1), rat(1)});
    CHECK(p.reflected() == p);  // (1-x)^2 - (1-x) + 3/10 = x^2 - x + 3/10
    std::mt19937 rng(9);
    for (int rep = 0; rep < 60; ++rep) {
        Poly q = random_poly(rng, 6);
        CHECK(q.reflected().reflected() == q);
    }
}

TEST_CASE("powers") {
    Poly x = Poly::indeterminate();
    CHECK(x.pow(0) == Poly(1));
    CHECK((Poly(1) - x).pow(2) == Poly({rat(1), rat(-2), rat(1)}));
}
