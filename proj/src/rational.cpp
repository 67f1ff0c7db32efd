#include "selberg/rational.hpp"

#include <stdexcept>

namespace selberg {

Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, text.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(raw)) == 0) {
        mpq_clear(raw);
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    }
    Rational q(raw);
    mpq_clear(raw);
    q.canonicalize();
    return q;
}

std::string fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw std::invalid_argument("0 raised to a negative power");
    const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational r = exp > 0 ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return r;
}

Rational poch(const Rational& x, const Rational& tau, long count) {
    Rational result(1);
    if (count >= 0) {
        Rational factor = x;
        for (long m = 0; m < count; ++m) {
            result *= factor;
            factor += tau;
        }
        return result;
    }
    // reflected: (x; tau)_{-m} = 1 / ((x - tau)(x - 2 tau)...(x - m tau))
    Rational factor = x;
    for (long m = 1; m <= -count; ++m) {
        factor -= tau;
        if (factor == 0) {
            throw ParameterSingular("reflected shifted factorial (" + fraction_string(x) +
                                    "; " + fraction_string(tau) + ")_" + std::to_string(count) +
                                    " has vanishing factor at shift -" + std::to_string(m));
        }
        result *= factor;
    }
    return Rational(1) / result;
}

Rational binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
    if (k < 0 || k > n) return Rational(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

} // namespace selberg
