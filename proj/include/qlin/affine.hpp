#pragma once

#include <vector>

#include "qlin/euclid.hpp"

namespace qlin {

/// Coordinate frame of an affine point space: an origin plus a basis of
/// the difference space.  Origin and basis coordinates refer to the
/// standard frame.
struct Frame {
    Matrix origin; // n x 1
    Basis basis;

    Frame(Matrix origin_, Basis basis_);
    static Frame standard(std::size_t n);
    std::size_t dim() const { return basis.dim(); }
};

/// Quadric x^t a x + 2 b^t x + c = 0 in a Euclidean point space with the
/// standard scalar product; a is symmetric.
class Quadric {
public:
    Quadric(Matrix a, Matrix b, Rational c);

    std::size_t dim() const { return a_.rows(); }
    const Matrix& a() const { return a_; }
    const Matrix& b() const { return b_; }
    const Rational& c() const { return c_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }

    /// Left-hand side value at a point.
    Rational evaluate(const Matrix& x) const;

private:
    Matrix a_, b_;
    Rational c_;
};

/// The point A + t a on the line through A with direction a; the
/// direction must be nonzero.
Matrix point_on_line(const Matrix& a_point, const Matrix& direction, const Rational& t);

/// Coordinates of the same point relative to the new frame, given its
/// coordinates in the old one.  Round trips compose to the identity
/// exactly.
Matrix change_frame(const Matrix& x, const Frame& old_frame, const Frame& new_frame);

/// Quadric coefficients in the new frame.  The transition between the
/// frames must be orthogonal (rectangular Cartesian to rectangular
/// Cartesian); throws DomainError otherwise.
Quadric quadric_transform(const Quadric& q, const Frame& old_frame, const Frame& new_frame);

/// Output of the square-completing reduction: b splits into a kernel part
/// and an image part of a, the image part is absorbed into a translation,
/// and the constant settles at its residual value.  In the shifted frame
/// the quadric reads x^t a x + 2 b1^t x + c_res = 0.
struct QuadricReduction {
    Subspace kernel;   // Ker a
    Subspace image;    // Im a
    Matrix b1;         // component of b in Ker a
    Matrix b2;         // component of b in Im a
    Matrix shift;      // translation with a*shift = -b2, minimum support
    Rational residual; // constant after the shift
};

QuadricReduction quadric_reduce(const Quadric& q);

enum class QuadricKind { elliptic, hyperbolic, conic, parabolic, cylindric };

const char* to_string(QuadricKind kind);

/// Canonical equation data: the quadratic coefficients after scaling,
/// positive terms first (each class by descending magnitude), and the
/// right-hand side.  Exact terms are present whenever the eigenvalues (and
/// the parabolic norm) are rational; float mirrors are always filled.
struct CanonicalEquation {
    bool exact = true;
    std::vector<Rational> exact_terms; // empty in float mode
    std::vector<double> terms;
    enum class Rhs { plus_one, minus_one, zero, linear } rhs = Rhs::zero;
};

/// Classification by the kernel/linear-part decision table.  A cylindric
/// quadric is reduced once more with the unused directions dropped; the
/// terminal kind and the dimension where it was reached are reported
/// alongside.  The canonical data always describes the terminal quadric.
struct QuadricClass {
    QuadricKind kind = QuadricKind::cylindric;
    QuadricKind terminal_kind = QuadricKind::cylindric;
    Signature signature_a;       // of the full matrix a
    std::size_t reduced_dim = 0; // dimension of the terminal quadric
    Rational residual_constant;  // c_res of the first reduction
    bool empty_locus = false;    // no real points (sign analysis)
    CanonicalEquation canonical;
};

/// Throws DomainError when a, b, c all vanish (the locus is the whole
/// space, which the classification does not cover).
QuadricClass quadric_classify(const Quadric& q);

/// The canonical data alone; classification runs internally.
CanonicalEquation canonical_equation(const Quadric& q);

} // namespace qlin
