#include "qlin/euclid.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace qlin {

EuclideanStructure::EuclideanStructure(QuadraticForm g) : g_(std::move(g)) {
    if (!sylvester_positive(g_).positive)
        throw DomainError("scalar product form is not positive");
    g_inv_ = inverse(g_.matrix());
}

EuclideanStructure EuclideanStructure::standard(std::size_t n) {
    return EuclideanStructure(QuadraticForm(Matrix::identity(n)));
}

Matrix gram(const Matrix& vectors, const EuclideanStructure& e) {
    if (vectors.rows() != e.dim())
        throw DimensionError("vectors do not live in the structure's space");
    return vectors.transpose() * e.metric() * vectors;
}

bool gram_dependent(const Matrix& vectors, const EuclideanStructure& e) {
    return det(gram(vectors, e)).is_zero();
}

Orthogonalization orthogonalize(const Matrix& vectors, const EuclideanStructure& e) {
    if (vectors.rows() != e.dim())
        throw DimensionError("vectors do not live in the structure's space");
    if (gram_dependent(vectors, e))
        throw DomainError("vectors are dependent");

    const std::size_t m = vectors.cols(), n = vectors.rows();
    Matrix u = vectors;
    // Projection recursion: subtract from each vector its components along
    // the already-orthogonalized ones.  Norms are nonzero by positivity.
    for (std::size_t j = 0; j < m; ++j) {
        Matrix vj = u.col(j);
        for (std::size_t i = 0; i < j; ++i) {
            Matrix ui = u.col(i);
            Rational coeff = e.inner(ui, vj) / e.norm_sq(ui);
            if (!coeff.is_zero())
                vj -= coeff * ui;
        }
        u.set_block(0, j, vj);
    }

    Orthogonalization out{u, {}};
    for (std::size_t j = 0; j < m; ++j) {
        Matrix uj = u.col(j);
        const double norm = std::sqrt(e.norm_sq(uj).to_double());
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i)
            col[i] = uj(i, 0).to_double() / norm;
        out.orthonormal.push_back(std::move(col));
    }
    return out;
}

Angle angle(const Matrix& v, const Matrix& w, const EuclideanStructure& e) {
    if (v.is_zero() || w.is_zero())
        throw DomainError("angle with a zero vector");
    Angle out{e.inner(v, w), e.norm_sq(v) * e.norm_sq(w), 0.0};
    double c = out.inner.to_double() / std::sqrt(out.norm_product_sq.to_double());
    c = std::clamp(c, -1.0, 1.0);
    out.radians = std::acos(c);
    return out;
}

Matrix adjoint(const Matrix& f, const EuclideanStructure& e) {
    if (f.rows() != e.dim() || !f.is_square())
        throw DimensionError("operator of a different space");
    return e.metric_inverse() * f.transpose() * e.metric();
}

JacobiResult jacobi_eigen(std::vector<double> a, std::size_t n) {
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        v[i * n + i] = 1.0;

    auto off_mass = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                s += 2.0 * a[p * n + q] * a[p * n + q];
        return s;
    };

    // Cyclic-by-rows sweeps; unconditionally convergent for symmetric
    // input, and a few sweeps suffice at these sizes.
    for (int sweep = 0; sweep < 100 && off_mass() >= 1e-24; ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0)
                    continue;
                const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p], vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * n + x] < a[y * n + y];
    });

    JacobiResult out;
    for (std::size_t k : order) {
        out.values.push_back(a[k * n + k]);
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i)
            col[i] = v[i * n + k];
        out.vectors.push_back(std::move(col));
    }
    return out;
}

namespace {

double spectral_residual(const Matrix& f, const std::vector<double>& values,
                         const std::vector<std::vector<double>>& vectors) {
    const std::size_t n = f.rows();
    std::vector<double> fd = f.to_doubles();
    double worst = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) {
            double r = -values[k] * vectors[k][i];
            for (std::size_t j = 0; j < n; ++j)
                r += fd[i * n + j] * vectors[k][j];
            worst = std::max(worst, std::fabs(r));
        }
    return worst;
}

} // namespace

SpectralDecomposition selfadjoint_spectrum(const Matrix& f, const EuclideanStructure& e,
                                           bool allow_float, double residual_gate) {
    if (f.rows() != e.dim() || !f.is_square())
        throw DimensionError("operator of a different space");
    if (adjoint(f, e) != f)
        throw DomainError("operator is not self-adjoint for this structure");

    SpectrumReport sp = spectrum(LinearOperator(f));

    SpectralDecomposition out;
    if (sp.fully_split) {
        out.exact = true;
        out.residual = 0.0;
        std::size_t total = 0;
        for (const auto& [lambda, mult] : sp.roots.entries) {
            Subspace space = eigenspace(LinearOperator(f), lambda);
            // Self-adjointness with a split spectrum forces completeness,
            // so each eigenspace realizes its multiplicity.
            assert(space.dim() == mult);
            Matrix ortho = orthogonalize(space.col_basis(), e).exact;
            total += space.dim();
            out.eigenpairs.emplace_back(lambda, std::move(ortho));
        }
        assert(total == e.dim());
        (void)total;
        return out;
    }

    if (!allow_float)
        throw DomainError(
            "spectrum is not rational; float fallback disabled "
            "(irreducible remainder " + sp.roots.remainder.to_string() + ")");
    if (!e.is_standard())
        throw DomainError(
            "float fallback needs the standard structure; transform first");

    JacobiResult jr = jacobi_eigen(f.to_doubles(), f.rows());
    out.exact = false;
    out.values = std::move(jr.values);
    out.vectors = std::move(jr.vectors);
    out.residual = spectral_residual(f, out.values, out.vectors);
    if (out.residual > residual_gate)
        throw DomainError("eigenvalue iteration missed the residual gate");
    return out;
}

namespace {

// g = l d l^t with unit lower-triangular l; pivots positive by positivity
// of the form.
void ldlt(const Matrix& g, Matrix& l, std::vector<Rational>& d) {
    const std::size_t n = g.rows();
    l = Matrix::identity(n);
    d.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        Rational dj = g(j, j);
        for (std::size_t k = 0; k < j; ++k)
            dj -= l(j, k) * l(j, k) * d[k];
        if (dj.sign() <= 0)
            throw DomainError("form is not positive");
        d[j] = dj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational lij = g(i, j);
            for (std::size_t k = 0; k < j; ++k)
                lij -= l(i, k) * l(j, k) * d[k];
            l(i, j) = lij / dj;
        }
    }
}

} // namespace

PairDiagonalization pair_diagonalize(const QuadraticForm& g_pos, const QuadraticForm& phi) {
    if (g_pos.dim() != phi.dim())
        throw DimensionError("forms of different spaces");
    EuclideanStructure e{g_pos}; // validates positivity
    const std::size_t n = g_pos.dim();

    // The operator G^{-1} Phi is self-adjoint for the g scalar product; a
    // rational spectrum lets the whole construction stay exact.
    Matrix k = e.metric_inverse() * phi.matrix();
    SpectrumReport sp = spectrum(LinearOperator(k));

    PairDiagonalization out;
    if (sp.fully_split) {
        out.exact = true;
        Matrix cols(n, 0);
        for (const auto& [lambda, mult] : sp.roots.entries) {
            Subspace space = eigenspace(LinearOperator(k), lambda);
            assert(space.dim() == mult);
            cols = hcat(cols, orthogonalize(space.col_basis(), e).exact);
            for (std::size_t i = 0; i < space.dim(); ++i) {
                out.exact_diag.push_back(lambda);
                out.diag.push_back(lambda.to_double());
            }
        }
        assert(cols.cols() == n);
        for (std::size_t j = 0; j < n; ++j) {
            Matrix cj = cols.col(j);
            const double norm = std::sqrt(e.norm_sq(cj).to_double());
            std::vector<double> col(n);
            for (std::size_t i = 0; i < n; ++i)
                col[i] = cj(i, 0).to_double() / norm;
            out.basis.push_back(std::move(col));
        }
        return out;
    }

    // Exact LDL^t of g, then floats: b0 = l^{-t} d^{-1/2} normalizes g,
    // and Jacobi diagonalizes the transformed phi.
    Matrix l;
    std::vector<Rational> d;
    ldlt(g_pos.matrix(), l, d);
    Matrix linv = inverse(l);
    Matrix m_exact = linv * phi.matrix() * linv.transpose();

    std::vector<double> sd(n);
    for (std::size_t i = 0; i < n; ++i)
        sd[i] = std::sqrt(d[i].to_double());
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i * n + j] = m_exact(i, j).to_double() / (sd[i] * sd[j]);

    JacobiResult jr = jacobi_eigen(std::move(m), n);
    out.exact = false;
    out.diag = jr.values;
    Matrix linvt = linv.transpose();
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<double> b(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t kk = 0; kk < n; ++kk)
                b[i] += linvt(i, kk).to_double() / sd[kk] * jr.vectors[col][kk];
        out.basis.push_back(std::move(b));
    }
    return out;
}

Matrix cayley_orthogonal(const Matrix& antisymmetric) {
    if (!antisymmetric.is_antisymmetric())
        throw DomainError("Cayley transform needs an antisymmetric matrix");
    const std::size_t n = antisymmetric.rows();
    const Matrix one = Matrix::identity(n);
    return (one - antisymmetric) * inverse(one + antisymmetric);
}

RotationForm rotation_canonical(const Matrix& f) {
    if (!f.is_square() || (f.rows() != 2 && f.rows() != 3))
        throw DimensionError("rotation form handles dimensions 2 and 3");
    const std::size_t n = f.rows();
    if (!(f.transpose() * f).is_identity())
        throw DomainError("matrix is not orthogonal");
    if (det(f) != Rational(1))
        throw DomainError("matrix is a reflection, determinant -1");

    RotationForm out;
    out.dim = n;

    if (n == 2) {
        const double c = f(0, 0).to_double(), s = f(1, 0).to_double();
        out.angle = std::atan2(s, c);
        out.canonical = {std::cos(out.angle), -std::sin(out.angle),
                         std::sin(out.angle), std::cos(out.angle)};
        out.frame = {1.0, 0.0, 0.0, 1.0};
        return out;
    }

    // A rotation of a three-dimensional space keeps an axis: the
    // eigenspace for 1 is nonzero.  Its reduced basis vector is exact.
    Subspace fixed = eigenspace(LinearOperator(f), Rational(1));
    assert(fixed.dim() >= 1);
    Matrix axis = fixed.row_basis().row(0).transpose();

    const double c = ((f.trace() - Rational(1)) / Rational(2)).to_double();

    auto build = [&](const Matrix& ax) {
        // Orthonormal frame with the axis in the last slot; the first leg
        // comes from the least-aligned coordinate direction.
        double a0 = ax(0, 0).to_double(), a1 = ax(1, 0).to_double(),
               a2 = ax(2, 0).to_double();
        const double norm = std::sqrt(a0 * a0 + a1 * a1 + a2 * a2);
        a0 /= norm; a1 /= norm; a2 /= norm;
        double e[3] = {0.0, 0.0, 0.0};
        const double aa[3] = {std::fabs(a0), std::fabs(a1), std::fabs(a2)};
        e[std::min_element(aa, aa + 3) - aa] = 1.0;
        const double d = e[0] * a0 + e[1] * a1 + e[2] * a2;
        double u[3] = {e[0] - d * a0, e[1] - d * a1, e[2] - d * a2};
        const double un = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
        u[0] /= un; u[1] /= un; u[2] /= un;
        // v = axis x u completes a right-handed frame (u, v, axis).
        const double v[3] = {a1 * u[2] - a2 * u[1], a2 * u[0] - a0 * u[2],
                             a0 * u[1] - a1 * u[0]};
        return std::vector<double>{u[0], v[0], a0, u[1], v[1], a1, u[2], v[2], a2};
    };

    // The sine read in the adapted frame fixes the orientation: flip the
    // axis when negative, so the reported angle lies in [0, pi].
    std::vector<double> w = build(axis);
    std::vector<double> fd = f.to_doubles();
    double s = 0.0; // (w^t f w)(1, 0)
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            s += w[i * 3 + 1] * fd[i * 3 + j] * w[j * 3];
    if (s < 0.0) {
        axis = -axis;
        w = build(axis);
        s = -s;
    }

    out.angle = std::atan2(s, c);
    out.axis = std::move(axis);
    out.frame = std::move(w);
    out.canonical = {std::cos(out.angle), -std::sin(out.angle), 0.0,
                     std::sin(out.angle), std::cos(out.angle),  0.0,
                     0.0,                 0.0,                  1.0};
    return out;
}

} // namespace qlin
