#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qlin/polynomial.hpp"
#include "qlin/subspace.hpp"

namespace qlin {

/// Operator on Q^n, held as its matrix in the standard basis.
class LinearOperator {
public:
    explicit LinearOperator(Matrix m) : f_(std::move(m)) {
        if (!f_.is_square() || f_.rows() == 0)
            throw DimensionError("operator needs a nonempty square matrix");
    }

    std::size_t dim() const { return f_.rows(); }
    const Matrix& matrix() const { return f_; }

private:
    Matrix f_;
};

/// det(f - x), by the trace recurrence of Faddeev and LeVerrier; exact,
/// division-free apart from the divisions by the step index.  The leading
/// coefficient is (-1)^n.
Polynomial char_poly(const LinearOperator& f);

/// Invariant coefficients F_1 .. F_n defined by
///   det(f - x) = (-x)^n + F_1 (-x)^{n-1} + ... + F_n,
/// read off a characteristic polynomial; F_1 is the trace, F_n the
/// determinant.
std::vector<Rational> invariant_coefficients(const Polynomial& characteristic);

/// Trace and determinant, computed directly (not via the characteristic
/// polynomial, so the two routes can cross-check each other).
std::pair<Rational, Rational> trace_det(const LinearOperator& f);

struct SpectrumReport {
    Polynomial characteristic;
    RootList roots; // roots of the characteristic polynomial
    bool fully_split;
};

SpectrumReport spectrum(const LinearOperator& f);

/// Ker (f - lambda), possibly zero-dimensional.
Subspace eigenspace(const LinearOperator& f, const Rational& lambda);

/// Ker (f - lambda)^n with n the dimension of the space; the largest
/// subspace on which f - lambda is nilpotent.
Subspace root_subspace(const LinearOperator& f, const Rational& lambda);

/// Basis adapted to a nilpotent operator: a union of chains, each chain
/// listed from its kernel member up to the generating vector, so the
/// operator maps every column to the previous one (and the first to zero).
/// Chain lengths are non-increasing and sum to the dimension.
struct ChainBasis {
    std::vector<std::size_t> lengths;
    Matrix basis;    // columns, chains concatenated
    unsigned height; // nilpotency index
};

/// Throws DomainError when f is not nilpotent.
ChainBasis nilpotent_chains(const LinearOperator& f);

struct JordanBlock {
    Rational eigenvalue;
    std::size_t size;
};

/// j = t^{-1} f t holds exactly; blocks appear by eigenvalue in root
/// discovery order, sizes non-increasing within an eigenvalue, and each
/// block carries ones directly above the diagonal.
struct JordanDecomposition {
    std::vector<JordanBlock> blocks;
    Matrix t;
    Matrix j;
};

/// Throws DomainError when the characteristic polynomial does not split
/// over the rationals.
JordanDecomposition jordan_form(const LinearOperator& f);

/// The characteristic polynomial evaluated at its own operator; the zero
/// matrix, by Hamilton and Cayley's theorem; returned rather than asserted
/// so callers can exhibit it.
Matrix hamilton_cayley_check(const LinearOperator& f);

/// Projectors onto each part of a direct decomposition, along the others.
/// Throws DomainError unless the parts really decompose the space.
std::vector<Matrix> projector_family(const std::vector<Subspace>& parts);

/// Matrix blocks of f in a basis adapted to an invariant subspace: the
/// action on the subspace and the induced action on the quotient.
struct Restriction {
    Matrix on_subspace;
    Matrix on_quotient;
    Basis adapted; // first dim(u) vectors span u
};

/// Throws DomainError when u is not invariant under f.
Restriction restrict_and_factor(const LinearOperator& f, const Subspace& u);

struct Diagonalizability {
    bool diagonalizable;
    std::optional<Basis> eigenbasis;
    std::vector<Rational> diagonal; // eigenvalues in eigenbasis column order
    std::string obstruction;        // empty when diagonalizable
    // (eigenvalue, geometric, algebraic) per rational eigenvalue
    std::vector<std::tuple<Rational, std::size_t, unsigned>> multiplicities;
};

Diagonalizability is_diagonalizable(const LinearOperator& f);

} // namespace qlin
