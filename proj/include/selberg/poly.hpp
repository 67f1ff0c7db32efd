#ifndef SELBERG_POLY_HPP
#define SELBERG_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg {

/// Dense univariate polynomial over Rational, coefficients stored in
/// ascending degree. The trailing coefficient is always nonzero; the zero
/// polynomial is the empty coefficient list (degree -1).
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);
    Poly(long constant);
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    /// The monomial x.
    static Poly indeterminate();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^k (zero outside the stored range).
    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational constant_value() const;   // requires degree <= 0

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& scalar);
    Poly& operator/=(const Rational& scalar);
    Poly operator-() const;

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& s) { return lhs *= s; }
    friend Poly operator*(const Rational& s, Poly rhs) { return rhs *= s; }
    friend Poly operator/(Poly lhs, const Rational& s) { return lhs /= s; }

    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    Rational eval(const Rational& at) const;

    /// Substitutes x -> 1 - x; an involution.
    Poly reflected() const;

    Poly pow(int e) const;

    std::string str() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace selberg

#endif
