#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "qlin/errors.hpp"

namespace qlin {

using Integer = mpz_class;

/// Arbitrary-precision rational number, kept reduced with a positive
/// denominator at all times, so equality of values is equality of
/// representations.  Backed by GMP.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : q_(n) {}

    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p", "-p", "p/q" with optional sign on p; q must be nonzero.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const;
    /// b must be nonzero.
    Rational reciprocal() const;
    /// Exponent may be negative; 0^0 = 1, 0^negative throws.
    Rational pow(long e) const;

    double to_double() const { return q_.get_d(); }
    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_; // invariant: canonical (reduced, positive denominator)
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// True iff r is the square of a rational; the root is then written to *root
/// when root is non-null.  The returned root is non-negative.
bool rational_sqrt(const Rational& r, Rational* root);

} // namespace qlin
