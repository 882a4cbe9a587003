#pragma once

#include <utility>
#include <vector>

#include "qlin/operators.hpp"
#include "qlin/quadform.hpp"

namespace qlin {

/// Q^n with a fixed positive quadratic form as its scalar product.
/// Positivity is established once, by Sylvester's criterion.
class EuclideanStructure {
public:
    explicit EuclideanStructure(QuadraticForm g);
    static EuclideanStructure standard(std::size_t n);

    std::size_t dim() const { return g_.dim(); }
    const QuadraticForm& form() const { return g_; }
    const Matrix& metric() const { return g_.matrix(); }
    const Matrix& metric_inverse() const { return g_inv_; }
    bool is_standard() const { return g_.matrix().is_identity(); }

    Rational inner(const Matrix& v, const Matrix& w) const { return g_(v, w); }
    Rational norm_sq(const Matrix& v) const { return g_(v); }

private:
    QuadraticForm g_;
    Matrix g_inv_;
};

/// Gram matrix of a vector system given as columns: pairwise scalar
/// products, symmetric.
Matrix gram(const Matrix& vectors, const EuclideanStructure& e);

/// True iff the system is linearly dependent; equivalent to a vanishing
/// Gram determinant.
bool gram_dependent(const Matrix& vectors, const EuclideanStructure& e);

/// Orthogonalization in two tiers: the projection recursion stays exact
/// (pairwise orthogonal rational columns spanning the same flag), the
/// normalization divides by float norms.
struct Orthogonalization {
    Matrix exact;                                   // rational columns
    std::vector<std::vector<double>> orthonormal;   // float columns
};

/// Throws DomainError when the input columns are dependent.
Orthogonalization orthogonalize(const Matrix& vectors, const EuclideanStructure& e);

/// Exact ingredients of the angle plus its float value: the scalar
/// product, the product of the squared norms, and
/// phi = arccos((v|w)/sqrt(|v|^2 |w|^2)) in [0, pi].
struct Angle {
    Rational inner;
    Rational norm_product_sq;
    double radians;
};

/// Throws DomainError on a zero vector.
Angle angle(const Matrix& v, const Matrix& w, const EuclideanStructure& e);

/// Adjoint operator matrix G^{-1} F^t G; plain transposition under the
/// standard structure.
Matrix adjoint(const Matrix& f, const EuclideanStructure& e);

/// Spectral data of a self-adjoint operator.  Exact mode carries rational
/// eigenvalues with exact pairwise-orthogonal eigenspace columns; float
/// mode carries the Jacobi output, eigenvalues ascending.
struct SpectralDecomposition {
    bool exact;
    std::vector<std::pair<Rational, Matrix>> eigenpairs; // exact mode
    std::vector<double> values;                          // float mode
    std::vector<std::vector<double>> vectors;            // float mode, columns
    double residual; // max ||F v - lambda v||_inf, 0 in exact mode
};

/// Takes the exact path when the characteristic polynomial splits over
/// the rationals; otherwise falls back to Jacobi iteration, which is only
/// available for the standard structure.  Throws DomainError when f is
/// not self-adjoint, when the fallback is disabled, or when a non-standard
/// structure would need it.
SpectralDecomposition selfadjoint_spectrum(const Matrix& f, const EuclideanStructure& e,
                                           bool allow_float = true,
                                           double residual_gate = 1e-10);

/// Basis simultaneously normalizing a positive form to the identity and
/// diagonalizing a second form.  Exact when the generalized spectrum is
/// rational; otherwise exact LDL^t factorization of g followed by float
/// rescaling and Jacobi.
struct PairDiagonalization {
    bool exact;
    std::vector<Rational> exact_diag;             // exact mode only
    std::vector<std::vector<double>> basis;       // columns
    std::vector<double> diag;
};

/// Throws DomainError when g_pos is not positive.
PairDiagonalization pair_diagonalize(const QuadraticForm& g_pos, const QuadraticForm& phi);

/// Canonical data of a rotation in dimension 2 or 3: the angle, the exact
/// invariant axis (dimension 3), the canonical block matrix and the
/// orthonormal frame exhibiting it, so that frame * canonical * frame^t
/// reconstructs the input within float tolerance.
struct RotationForm {
    std::size_t dim;
    double angle;                  // in [0, pi] for dimension 3
    Matrix axis;                   // exact unit eigenvector direction, dim 3; 0x0 in dim 2
    std::vector<double> canonical; // dim x dim, row-major
    std::vector<double> frame;     // dim x dim, row-major, columns = adapted basis
};

/// Input must satisfy F^t F = 1 exactly with det F = 1; throws DomainError
/// otherwise, and DimensionError outside dimensions 2 and 3.
RotationForm rotation_canonical(const Matrix& f);

/// Cayley transform (1 - A)(1 + A)^{-1} of an antisymmetric matrix: an
/// exact rational orthogonal matrix with determinant 1.  1 + A is always
/// invertible for antisymmetric A.
Matrix cayley_orthogonal(const Matrix& antisymmetric);

/// Cyclic-by-rows Jacobi iteration on a symmetric matrix, run until the
/// off-diagonal Frobenius mass drops below 1e-24.  Eigenvalues ascending,
/// vectors as matching columns.
struct JacobiResult {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

JacobiResult jacobi_eigen(std::vector<double> sym_rowmajor, std::size_t n);

} // namespace qlin
