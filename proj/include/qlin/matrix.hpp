#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qlin/rational.hpp"

namespace qlin {

/// Dense matrix over the rationals, row-major.  All arithmetic is exact;
/// equality is entrywise equality of reduced fractions.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix scalar(std::size_t n, const Rational& c);
    static Matrix diagonal(const std::vector<Rational>& d);
    static Matrix column(const std::vector<Rational>& v);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const;
    /// Binary powering; e = 0 gives the identity.  Square matrices only.
    Matrix pow(unsigned long e) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool is_identity() const;

    Rational trace() const;

    /// Half-open row/column ranges.
    Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
    Matrix row(std::size_t i) const { return block(i, i + 1, 0, cols_); }
    Matrix col(std::size_t j) const { return block(0, rows_, j, j + 1); }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    /// Side-by-side and stacked composition.
    friend Matrix hcat(const Matrix& a, const Matrix& b);
    friend Matrix vcat(const Matrix& a, const Matrix& b);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, Matrix m);
    friend Matrix operator-(const Matrix& m) { return Rational(-1) * m; }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<double> to_doubles() const;  // row-major

    /// Column-aligned rendering, one matrix row per line.
    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Result of full row reduction.  reduced is the reduced row echelon form,
/// transform is the invertible record of the row operations, so
/// transform * input == reduced exactly; pivots lists the pivot columns.
struct Rref {
    Matrix reduced;
    Matrix transform;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free (Bareiss) forward elimination followed by an exact
/// back-substitution pass.  Pivots are the first nonzero entries in
/// scan order, so the result is canonical: two row spans are equal
/// iff their reduced forms are equal.
Rref rref(const Matrix& m);

/// Determinant by fraction-free elimination.  Square matrices only.
Rational det(const Matrix& m);

/// Throws SingularMatrixError when no inverse exists.
Matrix inverse(const Matrix& m);

/// Particular solution of A X = B, one column of X per column of B, with
/// every free variable set to zero (the coordinates are read off the
/// reduced form of A, which makes the answer canonical).  Throws
/// DomainError when some column is inconsistent.
Matrix solve(const Matrix& a, const Matrix& b);

/// Kernel basis as columns, read off the reduced form: one column per
/// free variable, with a unit in the free slot.  n x 0 when injective.
Matrix nullspace(const Matrix& a);

} // namespace qlin
