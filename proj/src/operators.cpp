#include "qlin/operators.hpp"

#include <algorithm>
#include <cassert>

namespace qlin {

Polynomial char_poly(const LinearOperator& f) {
    const Matrix& a = f.matrix();
    const std::size_t n = f.dim();
    // Faddeev-LeVerrier: m_k = a m_{k-1} + c_{n-k+1} 1, c_{n-k} = -tr(a m_k)/k
    // builds det(x - f); the book convention det(f - x) is (-1)^n of that.
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    Matrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + Matrix::scalar(n, c[n - k + 1]);
        c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
    }
    if (n % 2)
        for (auto& ci : c)
            ci = -ci;
    return Polynomial(std::move(c));
}

std::vector<Rational> invariant_coefficients(const Polynomial& characteristic) {
    const std::size_t n = characteristic.degree();
    std::vector<Rational> inv(n);
    for (std::size_t k = 1; k <= n; ++k) {
        // coefficient of x^{n-k} carries F_k (-1)^{n-k}
        Rational c = characteristic.coeff(n - k);
        inv[k - 1] = (n - k) % 2 ? -c : c;
    }
    return inv;
}

std::pair<Rational, Rational> trace_det(const LinearOperator& f) {
    return {f.matrix().trace(), det(f.matrix())};
}

SpectrumReport spectrum(const LinearOperator& f) {
    SpectrumReport report;
    report.characteristic = char_poly(f);
    report.roots = rational_roots(report.characteristic);
    report.fully_split = report.roots.fully_split();
    return report;
}

Subspace eigenspace(const LinearOperator& f, const Rational& lambda) {
    return Subspace::span_cols(
        nullspace(f.matrix() - Matrix::scalar(f.dim(), lambda)));
}

Subspace root_subspace(const LinearOperator& f, const Rational& lambda) {
    Matrix shifted = f.matrix() - Matrix::scalar(f.dim(), lambda);
    return Subspace::span_cols(nullspace(shifted.pow(f.dim())));
}

ChainBasis nilpotent_chains(const LinearOperator& f) {
    const std::size_t n = f.dim();
    const Matrix& a = f.matrix();

    // Powers 1, a, a^2, ... up to the first zero power.
    std::vector<Matrix> powers{Matrix::identity(n)};
    while (!powers.back().is_zero()) {
        if (powers.size() > n)
            throw DomainError("operator is not nilpotent");
        powers.push_back(powers.back() * a);
    }
    const unsigned height = static_cast<unsigned>(powers.size()) - 1;

    ChainBasis out;
    out.height = height;
    assert(height >= 1); // n = 0 is excluded by the operator type

    const Subspace kernel = Subspace::span_cols(nullspace(a));

    // Seeds are kernel vectors graded by how deep they sit in the image
    // flag Ker a ∩ Im a^{k-1}.  Walk the flag top down; at each level
    // independent new directions start a chain of exactly that height.
    Matrix seeds(0, n); // rows: all seeds picked so far
    std::vector<std::pair<Matrix, unsigned>> pending; // (seed column, level)
    for (unsigned k = height; k >= 1; --k) {
        Subspace level = (k == 1)
            ? kernel
            : sum_and_intersection(kernel, Subspace::span_cols(powers[k - 1])).intersection;
        for (std::size_t i = 0; i < level.dim(); ++i) {
            Matrix cand = level.row_basis().row(i);
            Matrix trial = vcat(seeds, cand);
            if (rref(trial).rank() > seeds.rows())
                seeds = std::move(trial);
            else
                continue;
            pending.emplace_back(cand.transpose(), k);
        }
    }

    // Lift each seed w to a generating vector x with a^{k-1} x = w; the
    // chain columns are then w, ..., a x, x.  Seeds were discovered from
    // the deepest level down, so chain lengths come out non-increasing.
    std::size_t total = 0;
    Matrix basis(n, 0);
    for (const auto& [w, k] : pending) {
        Matrix x = solve(powers[k - 1], w);
        Matrix chain(n, k);
        for (unsigned i = 0; i < k; ++i)
            chain.set_block(0, i, powers[k - 1 - i] * x);
        basis = hcat(basis, chain);
        out.lengths.push_back(k);
        total += k;
    }
    assert(total == n && "chain lengths must fill the space");
    out.basis = std::move(basis);
    return out;
}

JordanDecomposition jordan_form(const LinearOperator& f) {
    const std::size_t n = f.dim();
    SpectrumReport sp = spectrum(f);
    if (!sp.fully_split)
        throw DomainError(
            "characteristic polynomial does not split over the rationals; "
            "irreducible remainder " + sp.roots.remainder.to_string());

    JordanDecomposition out;
    Matrix t(n, 0);
    for (const auto& [lambda, mult] : sp.roots.entries) {
        const Subspace root = root_subspace(f, lambda);
        assert(root.dim() == mult && "root subspace must realize the multiplicity");
        const Matrix b = root.col_basis();
        const Matrix shifted = f.matrix() - Matrix::scalar(n, lambda);
        // Coordinates of the restriction of f - lambda to the root
        // subspace; nilpotent there by construction.
        const Matrix restricted = solve(b, shifted * b);
        ChainBasis chains = nilpotent_chains(LinearOperator(restricted));
        t = hcat(t, b * chains.basis);
        for (std::size_t len : chains.lengths)
            out.blocks.push_back({lambda, len});
    }

    Matrix j(n, n);
    std::size_t at = 0;
    for (const auto& block : out.blocks) {
        for (std::size_t i = 0; i < block.size; ++i) {
            j(at + i, at + i) = block.eigenvalue;
            if (i + 1 < block.size)
                j(at + i, at + i + 1) = Rational(1);
        }
        at += block.size;
    }

    out.t = std::move(t);
    out.j = std::move(j);
    assert(inverse(out.t) * f.matrix() * out.t == out.j);
    return out;
}

Matrix hamilton_cayley_check(const LinearOperator& f) {
    return char_poly(f).eval(f.matrix());
}

std::vector<Matrix> projector_family(const std::vector<Subspace>& parts) {
    if (parts.empty())
        throw DomainError("no parts given");
    const std::size_t n = parts.front().ambient();
    std::size_t total = 0;
    Matrix b(n, 0);
    for (const auto& part : parts) {
        if (part.ambient() != n)
            throw DimensionError("parts live in different ambient spaces");
        b = hcat(b, part.col_basis());
        total += part.dim();
    }
    if (total != n)
        throw DomainError("part dimensions do not sum to the ambient dimension");

    Matrix binv;
    try {
        binv = inverse(b);
    } catch (const SingularMatrixError&) {
        throw DomainError("parts are not independent, no direct decomposition");
    }

    // In the adapted basis each projector is a selector of coordinates.
    std::vector<Matrix> projectors;
    std::size_t at = 0;
    for (const auto& part : parts) {
        Matrix e(n, n);
        for (std::size_t i = 0; i < part.dim(); ++i)
            e(at + i, at + i) = Rational(1);
        projectors.push_back(b * e * binv);
        at += part.dim();
    }
    return projectors;
}

Restriction restrict_and_factor(const LinearOperator& f, const Subspace& u) {
    if (u.ambient() != f.dim())
        throw DimensionError("subspace of a different space");
    for (std::size_t i = 0; i < u.dim(); ++i) {
        Matrix v = u.row_basis().row(i).transpose();
        if (!u.contains(f.matrix() * v))
            throw DomainError("subspace is not invariant under the operator");
    }
    Basis adapted = complete_basis(u);
    const Matrix m = adapted.inverse_vectors() * f.matrix() * adapted.vectors();
    const std::size_t s = u.dim(), n = f.dim();
    assert(m.block(s, n, 0, s).is_zero());
    Restriction out{m.block(0, s, 0, s), m.block(s, n, s, n), std::move(adapted)};
    return out;
}

Diagonalizability is_diagonalizable(const LinearOperator& f) {
    const std::size_t n = f.dim();
    SpectrumReport sp = spectrum(f);

    Diagonalizability out;
    out.diagonalizable = false;

    std::size_t geometric_total = 0;
    std::vector<Subspace> spaces;
    for (const auto& [lambda, mult] : sp.roots.entries) {
        Subspace e = eigenspace(f, lambda);
        out.multiplicities.emplace_back(lambda, e.dim(), mult);
        geometric_total += e.dim();
        spaces.push_back(std::move(e));
    }

    if (!sp.fully_split) {
        out.obstruction =
            "characteristic polynomial does not split over the rationals; "
            "irreducible remainder " + sp.roots.remainder.to_string();
        return out;
    }
    if (geometric_total != n) {
        std::string detail;
        for (const auto& [lambda, geo, alg] : out.multiplicities)
            if (geo != alg)
                detail += " " + lambda.to_string() + " (geometric " +
                          std::to_string(geo) + " < algebraic " +
                          std::to_string(alg) + ")";
        out.obstruction = "defective eigenvalues:" + detail;
        return out;
    }

    Matrix b(n, 0);
    for (std::size_t k = 0; k < spaces.size(); ++k) {
        b = hcat(b, spaces[k].col_basis());
        for (std::size_t i = 0; i < spaces[k].dim(); ++i)
            out.diagonal.push_back(sp.roots.entries[k].first);
    }
    out.diagonalizable = true;
    out.eigenbasis = Basis(std::move(b));
    return out;
}

} // namespace qlin
