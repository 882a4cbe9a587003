#include "qlin/rational.hpp"

#include <cctype>
#include <ostream>

namespace qlin {

namespace {

void check_denominator(const Integer& den) {
    if (sgn(den) == 0)
        throw DomainError("rational with zero denominator");
}

} // namespace

Rational::Rational(long num, long den) : q_(0) {
    check_denominator(Integer(den));
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : q_(0) {
    check_denominator(den);
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return ParseError("not a rational: '" + std::string(text) + "'"); };

    // [sign] digits [ '/' [sign] digits ], no whitespace inside.
    auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        if (s[0] == '+' || s[0] == '-')
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };

    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!digits(den))
            throw bad();
    }
    if (!digits(num))
        throw bad();

    Integer n(std::string(num), 10);
    if (den.empty())
        return Rational(n);
    Integer d(std::string(den), 10);
    if (sgn(d) == 0)
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw DomainError("division by zero");
    return Rational(denominator(), numerator());
}

Rational Rational::pow(long e) const {
    if (e < 0)
        return reciprocal().pow(-e);
    Rational base = *this, acc = 1;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1)
            acc *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return acc;
}

std::string Rational::to_string() const {
    if (is_integer())
        return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

bool rational_sqrt(const Rational& r, Rational* root) {
    if (r.sign() < 0)
        return false;
    Integer num = r.numerator(), den = r.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    if (root)
        *root = Rational(sn, sd);
    return true;
}

} // namespace qlin
