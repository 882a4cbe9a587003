#include "qlin/subspace.hpp"

namespace qlin {

Subspace Subspace::span_rows(const Matrix& generators) {
    Rref r = rref(generators);
    Matrix basis = r.reduced.block(0, r.rank(), 0, generators.cols());
    return Subspace(std::move(basis), std::move(r.pivots), generators.cols());
}

Subspace Subspace::zero(std::size_t ambient) {
    return Subspace(Matrix(0, ambient), {}, ambient);
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t j = 0; j < ambient; ++j)
        pivots[j] = j;
    return Subspace(Matrix::identity(ambient), std::move(pivots), ambient);
}

bool Subspace::contains(const Matrix& column_vector) const {
    if (column_vector.rows() != ambient_ || column_vector.cols() != 1)
        throw DimensionError("vector does not live in the ambient space");
    // Reduce v by the canonical rows; membership iff nothing is left.
    Matrix v = column_vector;
    for (std::size_t k = 0; k < basis_.rows(); ++k) {
        const Rational c = v(pivots_[k], 0); // copy, the loop writes through v
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            v(j, 0) -= c * basis_(k, j);
    }
    return v.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw DimensionError("subspaces of different ambient spaces");
    for (std::size_t k = 0; k < other.dim(); ++k)
        if (!contains(other.basis_.row(k).transpose()))
            return false;
    return true;
}

Basis::Basis(Matrix columns) : vectors_(std::move(columns)) {
    if (!vectors_.is_square() || vectors_.rows() == 0)
        throw DimensionError("basis needs a nonempty square matrix");
    inverse_ = inverse(vectors_); // throws SingularMatrixError if dependent
}

Basis Basis::standard(std::size_t n) {
    return Basis(Matrix::identity(n));
}

Transition transition(const Basis& old_basis, const Basis& new_basis) {
    if (old_basis.dim() != new_basis.dim())
        throw DimensionError("bases of different dimensions");
    Transition tr;
    tr.s = old_basis.inverse_vectors() * new_basis.vectors();
    tr.t = new_basis.inverse_vectors() * old_basis.vectors();
    return tr;
}

Matrix change_coordinates(const Matrix& coords, const Transition& tr, Direction dir) {
    return dir == Direction::new_to_old ? tr.s * coords : tr.t * coords;
}

SumIntersection sum_and_intersection(const Subspace& u, const Subspace& w) {
    if (u.ambient() != w.ambient())
        throw DimensionError("subspaces of different ambient spaces");
    const std::size_t n = u.ambient();
    Matrix stacked = vcat(hcat(u.row_basis(), u.row_basis()),
                          hcat(w.row_basis(), Matrix(w.dim(), n)));
    Rref r = rref(stacked);

    std::size_t left = 0;
    while (left < r.pivots.size() && r.pivots[left] < n)
        ++left;
    // Rows 0..left have their pivot on the left: their left halves are the
    // reduced basis of u + w.  Rows below have zero left half; the right
    // halves land in both spans and are reduced among themselves.
    Matrix sum_rows = r.reduced.block(0, left, 0, n);
    Matrix inter_rows = r.reduced.block(left, r.rank(), n, 2 * n);
    return {Subspace::span_rows(sum_rows), Subspace::span_rows(inter_rows)};
}

Basis complete_basis(const Subspace& u) {
    if (u.ambient() == 0)
        throw DimensionError("no basis for a zero-dimensional ambient space");
    const std::size_t n = u.ambient(), s = u.dim();
    Matrix b(n, n);
    b.set_block(0, 0, u.col_basis());
    std::size_t t = s, k = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (k < s && u.pivots()[k] == j)
            ++k;
        else
            b(j, t++) = Rational(1);
    }
    return Basis(std::move(b));
}

QuotientBasis::QuotientBasis(const Subspace& u) : u_(u), total_(complete_basis(u)) {}

Matrix QuotientBasis::coset_reps() const {
    return total_.vectors().block(0, u_.ambient(), u_.dim(), u_.ambient());
}

Matrix QuotientBasis::reduce(const Matrix& v) const {
    if (v.rows() != u_.ambient() || v.cols() != 1)
        throw DimensionError("vector does not live in the ambient space");
    Matrix coords = total_.inverse_vectors() * v;
    return coords.block(u_.dim(), u_.ambient(), 0, 1);
}

KernelImage kernel_image(const Matrix& f) {
    return {Subspace::span_cols(nullspace(f)), Subspace::span_cols(f)};
}

Matrix map_change_of_bases(const Matrix& f, const Transition& domain,
                           const Transition& codomain) {
    return codomain.t * f * domain.s;
}

AlmostDiagonal almost_diagonal(const Matrix& f) {
    if (f.is_zero())
        throw DomainError("zero map has no almost diagonal form");

    KernelImage ki = kernel_image(f);
    const std::size_t rank = ki.image.dim();

    Basis codomain = complete_basis(ki.image);
    Matrix image_cols = codomain.vectors().block(0, f.rows(), 0, rank);
    // One preimage per image basis vector; free variables pinned to zero
    // keep the choice canonical.
    Matrix preimages = solve(f, image_cols);
    Matrix domain_cols = hcat(preimages, ki.kernel.col_basis());

    Basis domain = Basis(domain_cols); // invertible by construction
    AlmostDiagonal out{std::move(domain), std::move(codomain), Matrix(), rank};
    out.canonical = out.codomain.inverse_vectors() * f * out.domain.vectors();
    return out;
}

} // namespace qlin
