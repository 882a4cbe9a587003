#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qlin/rational.hpp"

namespace qlin {

class Matrix;

/// Dense univariate polynomial over the rationals.  Coefficients are stored
/// by ascending power and carry no trailing zeros, so degree() is the size
/// of the store minus one and the zero polynomial is stored as {0}.
class Polynomial {
public:
    Polynomial() : c_{Rational(0)} {}
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& a);
    /// The monomial x.
    static Polynomial variable();

    std::size_t degree() const { return c_.size() - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    const Rational& coeff(std::size_t i) const;  // 0 beyond the degree
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    /// Horner evaluation with the constant term mapped to c0 * identity.
    Matrix eval(const Matrix& m) const;

    /// Quotient and remainder of division by (x - r); the remainder is the
    /// scalar value at r.
    std::pair<Polynomial, Rational> divide_linear(const Rational& r) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, Polynomial p);
    friend Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Rendered by descending power, e.g. "x^2 - 5*x + 6"; "0" when zero.
    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<Rational> c_;
    void trim();
};

/// Rational roots of a polynomial with multiplicities, in a deterministic
/// discovery order: a root at zero first, then by ascending numerator and
/// denominator candidates, positive sign before negative.  The remainder is
/// the cofactor with no rational roots, normalized so that
///
///     product over entries of (root - x)^mult  *  remainder  ==  input
///
/// holds with exact coefficient equality.  fully_split() means the
/// remainder is a (nonzero) constant.
struct RootList {
    std::vector<std::pair<Rational, unsigned>> entries;
    Polynomial remainder;

    bool fully_split() const { return remainder.degree() == 0; }
    unsigned total_multiplicity() const;
};

/// Throws DomainError for the zero polynomial.
RootList rational_roots(const Polynomial& p);

} // namespace qlin
