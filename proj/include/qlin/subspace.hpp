#pragma once

#include <cstddef>
#include <vector>

#include "qlin/matrix.hpp"

namespace qlin {

/// Subspace of Q^n held by a canonical basis: the reduced row echelon form
/// of any generating set.  Two subspaces are equal iff their canonical
/// bases are equal entrywise, which makes equality of spans a plain
/// matrix comparison.
class Subspace {
public:
    /// Span of the rows (or columns); zero generators are fine.
    static Subspace span_rows(const Matrix& generators);
    static Subspace span_cols(const Matrix& generators) {
        return span_rows(generators.transpose());
    }
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }

    /// dim x ambient, reduced row echelon, no zero rows.
    const Matrix& row_basis() const { return basis_; }
    /// ambient x dim; the same vectors as columns.
    Matrix col_basis() const { return basis_.transpose(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Matrix& column_vector) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots, std::size_t ambient)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Basis of Q^n: an invertible matrix whose columns are the basis vectors,
/// with the inverse computed once and kept.
class Basis {
public:
    explicit Basis(Matrix columns);
    static Basis standard(std::size_t n);

    std::size_t dim() const { return vectors_.rows(); }
    const Matrix& vectors() const { return vectors_; }
    const Matrix& inverse_vectors() const { return inverse_; }
    Matrix vector(std::size_t j) const { return vectors_.col(j); }

private:
    Matrix vectors_, inverse_;
};

/// Change of basis: columns of s are the coordinates of the new basis
/// vectors in the old basis, and t is its inverse, so coordinate columns
/// move by x_old = s * x_new and x_new = t * x_old.
struct Transition {
    Matrix s;
    Matrix t;
};

Transition transition(const Basis& old_basis, const Basis& new_basis);

enum class Direction { new_to_old, old_to_new };

/// Applies a transition to a coordinate column (or several).
Matrix change_coordinates(const Matrix& coords, const Transition& tr, Direction dir);

/// Both the sum and the intersection fall out of one elimination on the
/// doubled generator matrix [U U; W 0]: rows with a pivot on the left
/// give the sum, rows that vanish on the left carry a member of the
/// intersection on the right.
struct SumIntersection {
    Subspace sum;
    Subspace intersection;
};

SumIntersection sum_and_intersection(const Subspace& u, const Subspace& w);

/// Extends the canonical basis of u to a basis of the ambient space by
/// standard unit vectors at the non-pivot positions.  The first dim(u)
/// columns are the subspace basis.
Basis complete_basis(const Subspace& u);

/// Working data for the quotient space modulo u: a completed basis whose
/// trailing vectors represent the cosets.
class QuotientBasis {
public:
    explicit QuotientBasis(const Subspace& u);

    const Subspace& subspace() const { return u_; }
    const Basis& total() const { return total_; }
    std::size_t quotient_dim() const { return u_.ambient() - u_.dim(); }
    /// ambient x quotient_dim, the coset representatives.
    Matrix coset_reps() const;
    /// Coordinates of the coset of v: the trailing coordinates of v in the
    /// completed basis.  Two vectors reduce to the same column iff they
    /// differ by a member of u.
    Matrix reduce(const Matrix& v) const;

private:
    Subspace u_;
    Basis total_;
};

struct KernelImage {
    Subspace kernel; // in the domain
    Subspace image;  // in the codomain
};

KernelImage kernel_image(const Matrix& f);

/// Matrix of the same map after changing bases in domain and codomain:
/// new_f = codomain.t * f * domain.s.
Matrix map_change_of_bases(const Matrix& f, const Transition& domain,
                           const Transition& codomain);

/// Bases that display a map as an identity block padded by zeros: pick a
/// basis of the image, pull one preimage back per image vector, append a
/// kernel basis in the domain, complete the image basis in the codomain.
struct AlmostDiagonal {
    Basis domain;
    Basis codomain;
    Matrix canonical; // codomain.inverse * f * domain.vectors
    std::size_t rank;
};

AlmostDiagonal almost_diagonal(const Matrix& f);

} // namespace qlin
