#include "qlin/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace qlin {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("ragged matrix initializer");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    return scalar(n, Rational(1));
}

Matrix Matrix::scalar(std::size_t n, const Rational& c) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = c;
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

Matrix Matrix::column(const std::vector<Rational>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionError("ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::pow(unsigned long e) const {
    if (!is_square())
        throw DimensionError("power of a non-square matrix");
    Matrix acc = identity(rows_), base = *this;
    while (e) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Matrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool Matrix::is_antisymmetric() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i))
                return false;
    return true;
}

bool Matrix::is_identity() const {
    return is_square() && *this == identity(rows_);
}

Rational Matrix::trace() const {
    if (!is_square())
        throw DimensionError("trace of a non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    if (r1 < r0 || c1 < c0 || r1 > rows_ || c1 > cols_)
        throw DimensionError("block range out of bounds");
    Matrix b(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            b(i - r0, j - c0) = (*this)(i, j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw DimensionError("block does not fit");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j)
            (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_)
        throw DimensionError("hcat with different row counts");
    Matrix m(a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_)
        throw DimensionError("vcat with different column counts");
    Matrix m(a.rows_ + b.rows_, a.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("adding matrices of different shapes");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("subtracting matrices of different shapes");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] -= o.a_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionError("multiplying matrices of incompatible shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator*(const Rational& s, Matrix m) {
    for (auto& x : m.a_)
        x *= s;
    return m;
}

std::vector<double> Matrix::to_doubles() const {
    std::vector<double> d(a_.size());
    for (std::size_t k = 0; k < a_.size(); ++k)
        d[k] = a_[k].to_double();
    return d;
}

std::string Matrix::to_string() const {
    std::vector<std::size_t> width(cols_, 0);
    std::vector<std::string> cell(a_.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            cell[i * cols_ + j] = (*this)(i, j).to_string();
            width[j] = std::max(width[j], cell[i * cols_ + j].size());
        }
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const std::string& s = cell[i * cols_ + j];
            if (j)
                out += ' ';
            out.append(width[j] - s.size(), ' ');
            out += s;
        }
        out += '\n';
    }
    return out;
}

namespace {

// Scale each row by the least common multiple of its denominators.  After
// this every entry is an integer and Bareiss division steps stay exact and
// cheap.  The augmented transform block receives the same scaling, which
// keeps it an exact record of the row operations.
void clear_row_denominators(Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = lcm(l, m(i, j).denominator());
        if (l != 1) {
            Rational f{l};
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) *= f;
        }
    }
}

} // namespace

Rref rref(const Matrix& m) {
    const std::size_t n = m.rows(), w = m.cols();
    Matrix work = hcat(m, Matrix::identity(n));
    clear_row_denominators(work);

    // Fraction-free forward pass: after each pivot step the update
    //   row_i <- (pivot * row_i - lead_i * row_pivot) / previous_pivot
    // divides exactly, keeping entries as small bordered minors.
    std::vector<std::size_t> pivots;
    Rational prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < w && r < n; ++c) {
        std::size_t p = r;
        while (p < n && work(p, c).is_zero())
            ++p;
        if (p == n)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < work.cols(); ++j)
                std::swap(work(p, j), work(r, j));
        const Rational piv = work(r, c);
        for (std::size_t i = r + 1; i < n; ++i) {
            const Rational lead = work(i, c);
            for (std::size_t j = 0; j < work.cols(); ++j)
                work(i, j) = (piv * work(i, j) - lead * work(r, j)) / prev;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }

    // Exact back substitution down to reduced echelon form.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t c = pivots[k];
        const Rational piv = work(k, c);
        for (std::size_t j = 0; j < work.cols(); ++j)
            work(k, j) /= piv;
        for (std::size_t i = 0; i < k; ++i) {
            const Rational f = work(i, c);
            if (f.is_zero())
                continue;
            for (std::size_t j = 0; j < work.cols(); ++j)
                work(i, j) -= f * work(k, j);
        }
    }

    Rref out;
    out.reduced = work.block(0, n, 0, w);
    out.transform = work.block(0, n, w, w + n);
    out.pivots = std::move(pivots);
    return out;
}

Rational det(const Matrix& m) {
    if (!m.is_square())
        throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return Rational(1);

    Matrix work = m;
    Rational scale(1); // product of row scalings applied to work
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j)
            l = lcm(l, work(i, j).denominator());
        if (l != 1) {
            Rational f{l};
            for (std::size_t j = 0; j < n; ++j)
                work(i, j) *= f;
            scale *= f;
        }
    }

    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && work(p, k).is_zero())
            ++p;
        if (p == n)
            return Rational(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(work(p, j), work(k, j));
            sign = -sign;
        }
        const Rational piv = work(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational lead = work(i, k);
            for (std::size_t j = k; j < n; ++j)
                work(i, j) = (piv * work(i, j) - lead * work(k, j)) / prev;
        }
        prev = piv;
    }
    Rational d = work(n - 1, n - 1) / scale;
    return sign < 0 ? -d : d;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square())
        throw DimensionError("inverse of a non-square matrix");
    Rref r = rref(m);
    if (r.rank() != m.rows())
        throw SingularMatrixError("matrix is singular");
    // transform * m == identity, so the transform is the inverse.
    return r.transform;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError("right-hand side has wrong height");
    Rref r = rref(a);
    const Matrix y = r.transform * b;
    // Rows of the reduced form beyond the rank are zero; the transformed
    // right-hand side must vanish there.
    for (std::size_t i = r.rank(); i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!y(i, j).is_zero())
                throw DomainError("inconsistent linear system");
    Matrix x(a.cols(), b.cols());
    for (std::size_t k = 0; k < r.rank(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(r.pivots[k], j) = y(k, j);
    return x;
}

Matrix nullspace(const Matrix& a) {
    Rref r = rref(a);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0, k = 0; j < a.cols(); ++j) {
        if (k < r.pivots.size() && r.pivots[k] == j)
            ++k;
        else
            free_cols.push_back(j);
    }
    Matrix k(a.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const std::size_t j = free_cols[t];
        k(j, t) = Rational(1);
        for (std::size_t p = 0; p < r.pivots.size(); ++p)
            k(r.pivots[p], t) = -r.reduced(p, j);
    }
    return k;
}

} // namespace qlin
