#pragma once

#include <utility>
#include <vector>

#include "qlin/subspace.hpp"

namespace qlin {

/// Bilinear form on Q^n via its component matrix f_ij = f(e_i, e_j);
/// possibly asymmetric.
class BilinearForm {
public:
    explicit BilinearForm(Matrix g) : g_(std::move(g)) {
        if (!g_.is_square())
            throw DimensionError("form needs a square matrix");
    }

    std::size_t dim() const { return g_.rows(); }
    const Matrix& matrix() const { return g_; }

    Rational operator()(const Matrix& v, const Matrix& w) const;

private:
    Matrix g_;
};

/// Quadratic form, identified with its unique symmetric bilinear form.
class QuadraticForm {
public:
    explicit QuadraticForm(Matrix g) : g_(std::move(g)) {
        if (!g_.is_symmetric())
            throw DimensionError("quadratic form needs a symmetric matrix");
    }

    std::size_t dim() const { return g_.rows(); }
    const Matrix& matrix() const { return g_; }

    Rational operator()(const Matrix& v) const;
    Rational operator()(const Matrix& v, const Matrix& w) const;

private:
    Matrix g_;
};

/// Unique decomposition of a bilinear form into a symmetric and an
/// antisymmetric part.
struct FormSplit {
    QuadraticForm symmetric;
    BilinearForm antisymmetric;
};

FormSplit split_form(const BilinearForm& f);

/// g in the basis with columns s: the congruent form s^t G s.  s must be
/// invertible.
QuadraticForm congruence_transform(const QuadraticForm& g, const Matrix& s);

/// Inertia indices: counts of zero, positive and negative entries in any
/// diagonalization; invariant by the law of inertia.
struct Signature {
    std::size_t s;   // zero index, equals dim Ker g
    std::size_t r_p; // positive index
    std::size_t r_n; // negative index

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Diagonalizing basis for a quadratic form: d = t^t G t is diagonal with
/// the zero entries first, then the positive, then the negative ones.
struct FormDiagonalization {
    Matrix t;
    Matrix d;
};

/// Constructive diagonalization: pick v with g(v) != 0 (basis vectors
/// first, then sums of two), split off its orthogonal complement, repeat.
/// The zero form diagonalizes to itself in the standard basis.
FormDiagonalization lagrange_diagonalize(const QuadraticForm& g);

Signature signature(const QuadraticForm& g);

/// Over the complex field only the rank survives: returns (s, n - s) with
/// s the kernel dimension.
std::pair<std::size_t, std::size_t> complex_signature(const QuadraticForm& g);

/// Sylvester's criterion: positivity is equivalent to all leading
/// principal minors being positive.  The minors come back for reporting.
struct SylvesterReport {
    bool positive;
    std::vector<Rational> minors; // M_1 .. M_n
};

SylvesterReport sylvester_positive(const QuadraticForm& g);

/// Ker g: vectors orthogonal to the whole space.
Subspace form_kernel(const QuadraticForm& g);

/// Orthogonal complement relative to the form: all v with g(v, u) = 0 for
/// every u in the subspace.  Satisfies
/// dim u + dim complement = n + dim(Ker g ∩ u).
Subspace orthocomp_form(const QuadraticForm& g, const Subspace& u);

} // namespace qlin
