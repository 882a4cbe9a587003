#pragma once

#include "qlin/subspace.hpp"

namespace qlin {

/// Linear functional on Q^n, a coordinate row.  Rows and columns are kept
/// apart on purpose: covectors transform with the transition matrix where
/// vectors transform against it.
class Covector {
public:
    explicit Covector(Matrix row) : row_(std::move(row)) {
        if (row_.rows() != 1)
            throw DimensionError("covector needs a single row");
    }
    static Covector zero(std::size_t n) { return Covector(Matrix(1, n)); }

    std::size_t dim() const { return row_.cols(); }
    const Matrix& row() const { return row_; }

    /// The value on a vector.
    Rational operator()(const Matrix& column_vector) const;

    friend bool operator==(const Covector& a, const Covector& b) {
        return a.row_ == b.row_;
    }

private:
    Matrix row_;
};

/// Subspace of the dual space, canonical like Subspace but made of rows
/// that eat vectors rather than rows that are vectors.
class DualSubspace {
public:
    static DualSubspace span_rows(const Matrix& functionals) {
        return DualSubspace(Subspace::span_rows(functionals));
    }
    static DualSubspace zero(std::size_t ambient) {
        return DualSubspace(Subspace::zero(ambient));
    }

    std::size_t ambient() const { return rep_.ambient(); }
    std::size_t dim() const { return rep_.dim(); }
    const Matrix& row_basis() const { return rep_.row_basis(); }
    bool contains(const Covector& f) const { return rep_.contains(f.row().transpose()); }

    friend bool operator==(const DualSubspace& a, const DualSubspace& b) {
        return a.rep_ == b.rep_;
    }

private:
    explicit DualSubspace(Subspace rep) : rep_(std::move(rep)) {}
    Subspace rep_;
};

/// In the dual space a change of basis acts by the inverse transition:
/// the dual basis of the new basis has coordinate rows t = s^{-1}.
Transition dual_transition(const Transition& tr);

/// Coordinate row of the same functional in the other basis; covectors
/// pick up s directly (old row times s gives the new row).
Covector covector_change_coordinates(const Covector& f, const Transition& tr,
                                     Direction dir);

/// Annihilator of a subspace of V, inside V*: all functionals vanishing
/// on it.  dim ann(u) = dim V - dim u.
DualSubspace annihilator(const Subspace& u);

/// Annihilator of a subspace of V*, inside V: the common kernel of its
/// functionals.
Subspace annihilator_of_dual(const DualSubspace& w);

/// The conjugate (transpose) map f*: W* -> V* with the four exact kernel
/// and image identities that tie f and f* together, each side computed
/// independently and compared.
struct ConjugateMap {
    Matrix conjugate; // matrix of f* in the dual bases: the transpose

    Subspace kernel;            // Ker f, in V
    Subspace image;             // Im f, in W
    DualSubspace dual_kernel;   // Ker f*, in W*
    DualSubspace dual_image;    // Im f*, in V*

    bool kernel_is_image_annihilator;       // Ker f* = ann(Im f)
    bool image_is_kernel_annihilator;       // Im f* = ann(Ker f)
    bool kernel_from_dual_image;            // Ker f = ann(Im f*)
    bool image_from_dual_kernel;            // Im f = ann(Ker f*)

    bool all_identities() const {
        return kernel_is_image_annihilator && image_is_kernel_annihilator &&
               kernel_from_dual_image && image_from_dual_kernel;
    }
};

ConjugateMap conjugate_map(const Matrix& f);

} // namespace qlin
