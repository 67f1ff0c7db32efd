#ifndef SELBERG_MATRICES_HPP
#define SELBERG_MATRICES_HPP

#include <stdexcept>
#include <vector>

#include "selberg/poly.hpp"
#include "selberg/rational.hpp"

namespace selberg {

/// Dense square matrix, 0-indexed, immutable in spirit once built.
template <class T>
class SquareMatrix {
public:
    explicit SquareMatrix(int order, const T& fill = T())
        : order_(order), entries_(static_cast<std::size_t>(order) * order, fill) {
        if (order < 1) throw std::invalid_argument("matrix order must be >= 1");
    }

    static SquareMatrix identity(int order) {
        SquareMatrix m(order);
        for (int i = 0; i < order; ++i) m(i, i) = T(1);
        return m;
    }

    int order() const { return order_; }

    T& operator()(int i, int j) { return entries_[index(i, j)]; }
    const T& operator()(int i, int j) const { return entries_[index(i, j)]; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.order_ != b.order_) throw std::invalid_argument("matrix order mismatch");
        SquareMatrix c(a.order_);
        for (int i = 0; i < a.order_; ++i)
            for (int k = 0; k < a.order_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (int j = 0; j < a.order_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    bool operator==(const SquareMatrix& rhs) const {
        return order_ == rhs.order_ && entries_ == rhs.entries_;
    }
    bool operator!=(const SquareMatrix& rhs) const { return !(*this == rhs); }

    /// M with both index orders reversed: out(i, j) = in(n-i, n-j).
    SquareMatrix reversed() const {
        SquareMatrix m(order_);
        for (int i = 0; i < order_; ++i)
            for (int j = 0; j < order_; ++j) m(i, j) = (*this)(order_ - 1 - i, order_ - 1 - j);
        return m;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i >= order_ || j >= order_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(i) * order_ + j;
    }

    int order_;
    std::vector<T> entries_;
};

using MatrixR = SquareMatrix<Rational>;
using MatrixP = SquareMatrix<Poly>;

/// The seven-tuple (alpha1, alpha2, alpha3, tau, x1, x2, x3) parameterizing
/// the generalized integrand. Each coordinate is either a rational constant
/// or the indeterminate x, at most one of the three being the indeterminate,
/// and x3 - x1 must not vanish identically.
struct GenericParams {
    Rational alpha1, alpha2, alpha3, tau;
    Poly x1, x2, x3;

    GenericParams(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& t,
                  Poly x1_, Poly x2_, Poly x3_);
    GenericParams(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& t,
                  const Rational& x1_, const Rational& x2_, const Rational& x3_);

    bool all_constant() const {
        return x1.is_constant() && x2.is_constant() && x3.is_constant();
    }
    GenericParams with_coordinates_swapped() const;  // (x2, alpha2) <-> (x3, alpha3)
};

// Triangular factors of the one-step difference matrix A = L D U. Entries:
//   l[i][j] = (-1)^(i-j) C(n-j, n-i) (a2+j t; t)_(i-j) / (a1+a2+2j t; t)_(i-j)
//             * ((x2-x1)/(x3-x1))^(i-j)
//   d[j]    = (a1; t)_j (a1+a2+2j t; t)_(n-j) (x2-x1)^j (x3-x1)^(n-j)
//             / ((a1+a2+(j-1)t; t)_j (a1+a2+a3+(n+j-1)t; t)_(n-j))
//   u[i][j] = (-1)^(j-i) C(j, i) (a3+(n-j)t; t)_(j-i) / (a1+a2+2i t; t)_(j-i)
// All require constant coordinates; L alone is not polynomial in x.
MatrixR build_L(const GenericParams& p, int n);
MatrixR build_D(const GenericParams& p, int n);
MatrixR build_U(const GenericParams& p, int n);

/// U^{-1}, entries C(j,i) (a3+(n-j)t; t)_(j-i) / (a1+a2+(j+i-1)t; t)_(j-i).
MatrixR build_U_inverse(const GenericParams& p, int n);

/// The same matrix in UL order, A = U' D' L'.
struct PrimedFactors {
    MatrixR u_prime;
    MatrixR d_prime;
    MatrixR l_prime;
};
PrimedFactors build_primed(const GenericParams& p, int n);

/// Denominator-free form of the difference system: T<phi> Utilde = <phi> Ltilde,
/// equivalently A * Utilde = Ltilde as matrices.
struct TildeSystem {
    MatrixR u_tilde;
    MatrixR l_tilde;
};
TildeSystem build_tilde(const GenericParams& p, int n);

/// Scalar part of A: A[i][j] = (x2-x1)^i (x3-x1)^(n-i) * scalar(i, j), with
/// scalar(i, j) = sum_{k<=min(i,j)} l[i][k] d[k] u[k][j] after the monomial
/// factors are pulled out analytically. Independent of the coordinates.
MatrixR build_A_scalars(const Rational& a1, const Rational& a2, const Rational& a3,
                        const Rational& tau, int n);

/// A = L D U assembled entrywise over Poly; coordinates may include the
/// indeterminate.
MatrixP build_A(const GenericParams& p, int n);

/// Exact check that A * Utilde = Ltilde at constant coordinates.
bool check_tilde_consistency(const GenericParams& p, int n);

} // namespace selberg

#endif
