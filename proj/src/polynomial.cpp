#include "qlin/polynomial.hpp"

#include <algorithm>
#include <map>

#include "qlin/matrix.hpp"

namespace qlin {

void Polynomial::trim() {
    while (c_.size() > 1 && c_.back().is_zero())
        c_.pop_back();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty())
        c_.push_back(Rational(0));
    trim();
}

Polynomial Polynomial::constant(const Rational& a) {
    return Polynomial({a});
}

Polynomial Polynomial::variable() {
    return Polynomial({Rational(0), Rational(1)});
}

const Rational& Polynomial::coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

Matrix Polynomial::eval(const Matrix& m) const {
    if (m.rows() != m.cols())
        throw DimensionError("polynomial evaluation needs a square matrix");
    Matrix acc = Matrix::scalar(m.rows(), c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;)
        acc = acc * m + Matrix::scalar(m.rows(), c_[i]);
    return acc;
}

std::pair<Polynomial, Rational> Polynomial::divide_linear(const Rational& r) const {
    if (degree() == 0)
        return {Polynomial(), c_[0]};
    std::vector<Rational> q(degree());
    Rational carry = c_.back();
    for (std::size_t i = degree(); i-- > 0;) {
        q[i] = carry;
        carry = c_[i] + carry * r;
    }
    return {Polynomial(std::move(q)), carry};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, Polynomial p) {
    for (auto& c : p.c_)
        c *= s;
    p.trim();
    return p;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& a = c_[i];
        if (a.is_zero())
            continue;
        if (out.empty())
            out += a.sign() < 0 ? "-" : "";
        else
            out += a.sign() < 0 ? " - " : " + ";
        Rational mag = a.abs();
        bool unit = mag == Rational(1) && i > 0;
        if (!unit)
            out += mag.to_string();
        if (i > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

unsigned RootList::total_multiplicity() const {
    unsigned total = 0;
    for (const auto& [root, mult] : entries)
        total += mult;
    return total;
}

namespace {

// Factor n (> 1) into primes.  Trial division handles the small part;
// Pollard's rho with Brent cycling mops up the large cofactors that can
// show up in constant terms of characteristic polynomials.
void factor_into(Integer n, std::map<Integer, unsigned>& primes) {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++primes[Integer(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    Integer d = 17;
    while (n > 1 && d * d <= n && d < 100000) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            ++primes[d];
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        } else {
            d += 2;
        }
    }
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++primes[n];
        return;
    }
    // Brent's variant of rho; deterministic retry schedule.
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, divisor = 1;
        Integer ys = y, q = 1;
        unsigned long r = 1;
        auto step = [&](Integer& v) {
            v = (v * v + c) % n;
        };
        while (divisor == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                step(y);
            for (unsigned long k = 0; k < r && divisor == 1; k += 128) {
                ys = y;
                for (unsigned long i = 0; i < std::min<unsigned long>(128, r - k); ++i) {
                    step(y);
                    Integer diff = x - y;
                    q = (q * (diff < 0 ? Integer(-diff) : diff)) % n;
                }
                divisor = gcd(q, n);
            }
            r *= 2;
        }
        if (divisor == n) {
            // Backtrack one step at a time.
            divisor = 1;
            while (divisor == 1) {
                step(ys);
                Integer diff = x - ys;
                divisor = gcd(Integer(diff < 0 ? Integer(-diff) : diff), n);
            }
            if (divisor == n)
                continue; // bad parameter, next c
        }
        factor_into(divisor, primes);
        factor_into(n / divisor, primes);
        return;
    }
}

// All positive divisors of n (n != 0), ascending.
std::vector<Integer> divisors(const Integer& n) {
    std::map<Integer, unsigned> primes;
    Integer a = ::abs(n);
    if (a > 1)
        factor_into(a, primes);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : primes) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Clear denominators and divide by the content, keeping the sign of the
// leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
    Integer l = 1;
    for (std::size_t i = 0; i <= p.degree(); ++i)
        l = lcm(l, p.coeff(i).denominator());
    std::vector<Integer> w(p.degree() + 1);
    Integer content = 0;
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        w[i] = p.coeff(i).numerator() * (l / p.coeff(i).denominator());
        content = gcd(content, w[i]);
    }
    if (content > 1)
        for (auto& c : w)
            c /= content;
    return w;
}

} // namespace

RootList rational_roots(const Polynomial& p) {
    if (p.is_zero())
        throw DomainError("every value is a root of the zero polynomial");

    RootList out;
    Polynomial work = p;

    // A root at zero first: its multiplicity is the number of leading
    // zero coefficients at the low end.
    unsigned zeros = 0;
    while (work.degree() > 0 && work.coeff(0).is_zero()) {
        work = work.divide_linear(Rational(0)).first;
        ++zeros;
    }
    if (zeros)
        out.entries.emplace_back(Rational(0), zeros);

    // Candidates p/q with p dividing the constant term and q the leading
    // coefficient of the integer-primitive representative.  Restart the
    // scan after each hit; deflation changes both ends.
    bool found = true;
    while (found && work.degree() > 0) {
        found = false;
        std::vector<Integer> w = primitive_integer_coeffs(work);
        for (const Integer& den : divisors(w.back())) {
            for (const Integer& num : divisors(w.front())) {
                if (gcd(num, den) != 1)
                    continue;
                for (int s : {+1, -1}) {
                    Rational cand(s > 0 ? num : Integer(-num), den);
                    if (work.eval(cand).is_zero()) {
                        unsigned mult = 0;
                        for (;;) {
                            auto [q, rem] = work.divide_linear(cand);
                            if (!rem.is_zero())
                                break;
                            work = q;
                            ++mult;
                            if (work.degree() == 0)
                                break;
                        }
                        out.entries.emplace_back(cand, mult);
                        found = true;
                    }
                    if (found)
                        break;
                }
                if (found)
                    break;
            }
            if (found)
                break;
        }
    }

    // Deflation used (x - root) factors; the contract is in (root - x)
    // factors, so each extracted factor flips the sign of the cofactor.
    out.remainder = out.total_multiplicity() % 2 ? -work : work;
    return out;
}

} // namespace qlin
