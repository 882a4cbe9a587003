#include "qlin/quadform.hpp"

#include <cassert>

namespace qlin {

namespace {

Rational bilinear_value(const Matrix& g, const Matrix& v, const Matrix& w) {
    if (v.rows() != g.rows() || v.cols() != 1 || w.rows() != g.rows() || w.cols() != 1)
        throw DimensionError("form applied to vectors of wrong size");
    return (v.transpose() * g * w)(0, 0);
}

} // namespace

Rational BilinearForm::operator()(const Matrix& v, const Matrix& w) const {
    return bilinear_value(g_, v, w);
}

Rational QuadraticForm::operator()(const Matrix& v) const {
    return bilinear_value(g_, v, v);
}

Rational QuadraticForm::operator()(const Matrix& v, const Matrix& w) const {
    return bilinear_value(g_, v, w);
}

FormSplit split_form(const BilinearForm& f) {
    const Matrix& g = f.matrix();
    const Rational half(1, 2);
    Matrix sym = half * (g + g.transpose());
    Matrix alt = half * (g - g.transpose());
    return {QuadraticForm(std::move(sym)), BilinearForm(std::move(alt))};
}

QuadraticForm congruence_transform(const QuadraticForm& g, const Matrix& s) {
    if (s.rows() != g.dim() || !s.is_square())
        throw DimensionError("transition matrix of wrong size");
    if (det(s).is_zero())
        throw SingularMatrixError("transition matrix is singular");
    return QuadraticForm(s.transpose() * g.matrix() * s);
}

namespace {

// Columns diagonalizing g together with the diagonal values, in
// construction order (reordered by the caller).
std::pair<Matrix, std::vector<Rational>> lagrange_recurse(const Matrix& g) {
    const std::size_t m = g.rows();
    if (m == 0)
        return {Matrix(0, 0), {}};
    if (g.is_zero()) {
        // Restriction of g to this slice vanishes: any basis is diagonal,
        // all values zero.  These are exactly the kernel directions.
        return {Matrix::identity(m), std::vector<Rational>(m, Rational(0))};
    }

    // A vector with g(v) != 0 exists among e_i and e_i + e_j: otherwise
    // the recovery formula makes every component vanish.
    Matrix v(m, 1);
    bool found = false;
    for (std::size_t i = 0; i < m && !found; ++i)
        if (!g(i, i).is_zero()) {
            v(i, 0) = Rational(1);
            found = true;
        }
    for (std::size_t i = 0; i < m && !found; ++i)
        for (std::size_t j = i + 1; j < m && !found; ++j)
            if (!g(i, j).is_zero()) {
                v(i, 0) = Rational(1);
                v(j, 0) = Rational(1);
                found = true;
            }
    assert(found);

    const Rational value = (v.transpose() * g * v)(0, 0);
    // Everything g-orthogonal to v is a complement; recurse there.
    Matrix complement = nullspace(v.transpose() * g);
    Matrix restricted = complement.transpose() * g * complement;
    auto [sub_cols, sub_diag] = lagrange_recurse(restricted);

    Matrix cols = hcat(v, complement * sub_cols);
    std::vector<Rational> diag{value};
    diag.insert(diag.end(), sub_diag.begin(), sub_diag.end());
    return {std::move(cols), std::move(diag)};
}

} // namespace

FormDiagonalization lagrange_diagonalize(const QuadraticForm& g) {
    auto [cols, diag] = lagrange_recurse(g.matrix());

    // Stable reorder: zeros, positives, negatives.
    std::vector<std::size_t> order;
    for (int cls = 0; cls < 3; ++cls)
        for (std::size_t i = 0; i < diag.size(); ++i) {
            const int sign = diag[i].sign();
            if ((cls == 0 && sign == 0) || (cls == 1 && sign > 0) ||
                (cls == 2 && sign < 0))
                order.push_back(i);
        }

    const std::size_t n = g.dim();
    FormDiagonalization out{Matrix(n, n), Matrix(n, n)};
    for (std::size_t k = 0; k < order.size(); ++k) {
        out.t.set_block(0, k, cols.col(order[k]));
        out.d(k, k) = diag[order[k]];
    }
    assert(out.t.transpose() * g.matrix() * out.t == out.d);
    return out;
}

Signature signature(const QuadraticForm& g) {
    FormDiagonalization fd = lagrange_diagonalize(g);
    Signature sig{0, 0, 0};
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const int s = fd.d(i, i).sign();
        if (s == 0)
            ++sig.s;
        else if (s > 0)
            ++sig.r_p;
        else
            ++sig.r_n;
    }
    return sig;
}

std::pair<std::size_t, std::size_t> complex_signature(const QuadraticForm& g) {
    const std::size_t rank = rref(g.matrix()).rank();
    return {g.dim() - rank, rank};
}

SylvesterReport sylvester_positive(const QuadraticForm& g) {
    SylvesterReport out{true, {}};
    for (std::size_t k = 1; k <= g.dim(); ++k) {
        Rational mk = det(g.matrix().block(0, k, 0, k));
        if (mk.sign() <= 0)
            out.positive = false;
        out.minors.push_back(std::move(mk));
    }
    return out;
}

Subspace form_kernel(const QuadraticForm& g) {
    return Subspace::span_cols(nullspace(g.matrix()));
}

Subspace orthocomp_form(const QuadraticForm& g, const Subspace& u) {
    if (u.ambient() != g.dim())
        throw DimensionError("subspace of a different space");
    // v is orthogonal to u iff (basis of u) G v = 0.
    return Subspace::span_cols(nullspace(u.row_basis() * g.matrix()));
}

} // namespace qlin
