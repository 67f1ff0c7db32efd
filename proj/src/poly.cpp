#include "selberg/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace selberg {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::indeterminate() { return Poly({Rational(0), Rational(1)}); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::constant_value() const {
    if (coeffs_.size() > 1) throw std::logic_error("constant_value on a nonconstant polynomial");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (Rational& c : coeffs_) c *= scalar;
    return *this;
}

Poly& Poly::operator/=(const Rational& scalar) {
    if (scalar == 0) throw std::invalid_argument("polynomial division by zero scalar");
    for (Rational& c : coeffs_) c /= scalar;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc *= at;
        acc += coeffs_[k];
    }
    return acc;
}

Poly Poly::reflected() const {
    // Horner in (1 - x).
    const Poly one_minus_x({Rational(1), Rational(-1)});
    Poly acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * one_minus_x;
        acc += Poly(coeffs_[k]);
    }
    return acc;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly result{Rational(1)};
    for (int k = 0; k < e; ++k) result *= *this;
    return result;
}

std::string Poly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

} // namespace selberg
