#include "qlin/affine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

#include "qlin/errors.hpp"
#include "qlin/euclid.hpp"
#include "qlin/operators.hpp"

namespace qlin {

Frame::Frame(Matrix origin_, Basis basis_)
    : origin(std::move(origin_)), basis(std::move(basis_)) {
    if (origin.cols() != 1 || origin.rows() != basis.dim())
        throw DimensionError("frame origin must be a column of the basis dimension");
}

Frame Frame::standard(std::size_t n) {
    return Frame(Matrix(n, 1), Basis::standard(n));
}

Quadric::Quadric(Matrix a, Matrix b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_.rows() != a_.cols() || a_.rows() == 0)
        throw DimensionError("quadric matrix must be square and nonempty");
    if (!a_.is_symmetric())
        throw DimensionError("quadric matrix must be symmetric");
    if (b_.rows() != a_.rows() || b_.cols() != 1)
        throw DimensionError("quadric linear part has the wrong shape");
}

Rational Quadric::evaluate(const Matrix& x) const {
    if (x.rows() != dim() || x.cols() != 1)
        throw DimensionError("point has the wrong dimension");
    Matrix quad = x.transpose() * a_ * x;
    Matrix lin = b_.transpose() * x;
    return quad(0, 0) + Rational(2) * lin(0, 0) + c_;
}

Matrix point_on_line(const Matrix& a, const Matrix& direction, const Rational& t) {
    if (a.cols() != 1 || direction.cols() != 1 || a.rows() != direction.rows())
        throw DimensionError("line needs a point and a direction of equal dimension");
    if (direction.is_zero())
        throw DomainError("line direction must be nonzero");
    return a + t * direction;
}

// Coordinates of the new origin relative to the old frame.
static Matrix origin_shift(const Frame& from, const Frame& to) {
    return from.basis.inverse_vectors() * (to.origin - from.origin);
}

Matrix change_frame(const Matrix& x, const Frame& old_frame, const Frame& new_frame) {
    if (old_frame.dim() != new_frame.dim())
        throw DimensionError("frames have different dimensions");
    if (x.rows() != old_frame.dim() || x.cols() != 1)
        throw DimensionError("point has the wrong dimension");
    Transition tr = transition(old_frame.basis, new_frame.basis);
    return tr.t * (x - origin_shift(old_frame, new_frame));
}

Quadric quadric_transform(const Quadric& q, const Frame& old_frame,
                          const Frame& new_frame) {
    if (old_frame.dim() != new_frame.dim() || q.dim() != old_frame.dim())
        throw DimensionError("quadric and frames must share a dimension");
    Transition tr = transition(old_frame.basis, new_frame.basis);
    const Matrix& s = tr.s;
    if (!(s.transpose() * s).is_identity())
        throw DomainError("frame change is not orthogonal");
    Matrix rho = origin_shift(old_frame, new_frame);
    Matrix a2 = s.transpose() * q.a() * s;
    Matrix b2 = s.transpose() * (q.b() + q.a() * rho);
    return Quadric(std::move(a2), std::move(b2), q.evaluate(rho));
}

QuadricReduction quadric_reduce(const Quadric& q) {
    if (q.is_zero())
        throw DomainError("the zero polynomial does not define a quadric");
    const std::size_t n = q.dim();
    KernelImage ki = kernel_image(q.a());

    // b = b1 + b2 with b1 in Ker a and b2 in Im a; the decomposition is
    // unique because a is symmetric, so kernel and image are complementary.
    const std::size_t kd = ki.kernel.dim();
    Matrix kb = ki.kernel.col_basis();
    Matrix ib = ki.image.col_basis();
    Matrix coords = solve(hcat(kb, ib), q.b());
    Matrix b1 = kb * coords.block(0, kd, 0, 1);
    Matrix b2 = ib * coords.block(kd, n, 0, 1);

    // Completing the square: a center shift killing the Im-a part of b.
    Matrix shift = solve(q.a(), -b2);
    Rational residual = q.evaluate(shift);
    return {std::move(ki.kernel), std::move(ki.image), std::move(b1),
            std::move(b2), std::move(shift), std::move(residual)};
}

const char* to_string(QuadricKind kind) {
    switch (kind) {
    case QuadricKind::elliptic: return "elliptic";
    case QuadricKind::hyperbolic: return "hyperbolic";
    case QuadricKind::conic: return "conic";
    case QuadricKind::parabolic: return "parabolic";
    case QuadricKind::cylindric: return "cylindric";
    }
    return "?";
}

// Nonzero eigenvalues of a, repeated by multiplicity.  Exact when the
// characteristic polynomial splits over the rationals; otherwise the
// cyclic Jacobi values, of which the `rank` largest by magnitude are the
// nonzero ones (rank itself is known exactly).
namespace {

struct EigenList {
    bool exact = true;
    std::vector<Rational> exact_values;
    std::vector<double> values;
};

EigenList nonzero_eigenvalues(const Matrix& a, std::size_t rank) {
    EigenList out;
    if (rank == 0)
        return out;
    SpectrumReport sp = spectrum(LinearOperator(a));
    if (sp.fully_split) {
        for (const auto& [root, mult] : sp.roots.entries)
            if (!root.is_zero())
                for (unsigned k = 0; k < mult; ++k) {
                    out.exact_values.push_back(root);
                    out.values.push_back(root.to_double());
                }
        assert(out.values.size() == rank);
        return out;
    }
    out.exact = false;
    JacobiResult jr = jacobi_eigen(a.to_doubles(), a.rows());
    std::vector<double> vals = jr.values;
    std::sort(vals.begin(), vals.end(),
              [](double x, double y) { return std::fabs(x) > std::fabs(y); });
    vals.resize(rank);
    out.values = std::move(vals);
    return out;
}

// Positive terms first, both tiers descending by magnitude.
bool term_order(double x, double y) {
    if ((x > 0) != (y > 0))
        return x > 0;
    return std::fabs(x) > std::fabs(y);
}

bool term_order_exact(const Rational& x, const Rational& y) {
    if ((x.sign() > 0) != (y.sign() > 0))
        return x.sign() > 0;
    return x.abs() > y.abs();
}

CanonicalEquation make_canonical(const Quadric& q, const QuadricReduction& red,
                                 QuadricKind terminal, std::size_t rank) {
    CanonicalEquation ce;
    if (terminal == QuadricKind::cylindric) {
        // Nothing quadratic or linear survives; the equation is 0 = -1.
        ce.rhs = CanonicalEquation::Rhs::minus_one;
        return ce;
    }

    EigenList eig = nonzero_eigenvalues(q.a(), rank);
    ce.exact = eig.exact;

    // Scale so the right side is +-1, 0, or the bare linear term 2*x_last.
    Rational exact_divisor(1);
    double divisor = 1.0;
    switch (terminal) {
    case QuadricKind::elliptic:
    case QuadricKind::hyperbolic:
        exact_divisor = red.residual.abs();
        divisor = exact_divisor.to_double();
        ce.rhs = red.residual.sign() < 0 ? CanonicalEquation::Rhs::plus_one
                                         : CanonicalEquation::Rhs::minus_one;
        break;
    case QuadricKind::conic: {
        ce.rhs = CanonicalEquation::Rhs::zero;
        if (eig.exact) {
            exact_divisor = eig.exact_values.front().abs();
            for (const Rational& v : eig.exact_values)
                exact_divisor = std::max(exact_divisor, v.abs());
            divisor = exact_divisor.to_double();
        } else {
            divisor = std::fabs(eig.values.front());
        }
        break;
    }
    case QuadricKind::parabolic: {
        ce.rhs = CanonicalEquation::Rhs::linear;
        Rational beta_sq = (red.b1.transpose() * red.b1)(0, 0);
        Rational beta;
        if (rational_sqrt(beta_sq, &beta)) {
            exact_divisor = beta;
            divisor = beta.to_double();
        } else {
            ce.exact = false;
            divisor = std::sqrt(beta_sq.to_double());
        }
        break;
    }
    case QuadricKind::cylindric:
        break; // unreachable, handled above
    }

    if (ce.exact)
        for (const Rational& v : eig.exact_values)
            ce.exact_terms.push_back(v / exact_divisor);
    else
        for (double v : eig.values)
            ce.terms.push_back(v / divisor);

    // Sign normalization: prefer more positive than negative terms, break
    // ties toward a positive total.  The constant side flips along.  The
    // divisor is positive, so signs can be read off the unscaled values.
    std::size_t pos = 0, neg = 0;
    bool total_negative;
    if (ce.exact) {
        Rational total(0);
        for (const Rational& v : ce.exact_terms) {
            (v.sign() > 0 ? pos : neg) += 1;
            total += v;
        }
        total_negative = total.sign() < 0;
    } else {
        double total = 0;
        for (double v : eig.values) {
            (v > 0 ? pos : neg) += 1;
            total += v;
        }
        total_negative = total < 0;
    }
    if (neg > pos || (neg == pos && total_negative)) {
        for (Rational& v : ce.exact_terms)
            v = -v;
        for (double& v : ce.terms)
            v = -v;
        if (ce.rhs == CanonicalEquation::Rhs::plus_one)
            ce.rhs = CanonicalEquation::Rhs::minus_one;
        else if (ce.rhs == CanonicalEquation::Rhs::minus_one)
            ce.rhs = CanonicalEquation::Rhs::plus_one;
    }

    if (ce.exact) {
        std::sort(ce.exact_terms.begin(), ce.exact_terms.end(), term_order_exact);
        for (const Rational& v : ce.exact_terms)
            ce.terms.push_back(v.to_double());
    } else {
        std::sort(ce.terms.begin(), ce.terms.end(), term_order);
    }
    return ce;
}

} // namespace

QuadricClass quadric_classify(const Quadric& q) {
    QuadricReduction red = quadric_reduce(q);
    const std::size_t n = q.dim();
    const std::size_t rank = red.image.dim();
    const std::size_t nullity = red.kernel.dim();
    const bool linear_left = !red.b1.is_zero();

    QuadricClass out;
    out.signature_a = signature(QuadraticForm(q.a()));
    out.residual_constant = red.residual;

    // Terminal classification of a quadric whose matrix is invertible on
    // its space: definite vs indefinite when a constant survives the
    // center shift, degenerate cone otherwise.
    auto center_kind = [&]() {
        if (out.residual_constant.is_zero())
            return QuadricKind::conic;
        bool definite = out.signature_a.r_p == 0 || out.signature_a.r_n == 0;
        return definite ? QuadricKind::elliptic : QuadricKind::hyperbolic;
    };

    if (nullity == 0) {
        out.kind = out.terminal_kind = center_kind();
        out.reduced_dim = n;
    } else if (nullity == 1 && linear_left) {
        out.kind = out.terminal_kind = QuadricKind::parabolic;
        out.reduced_dim = n;
    } else {
        // The quadric is a cylinder over a lower-dimensional one.  One
        // reduction step is already terminal: the polynomial only involves
        // the Im-a directions plus, when b1 is nonzero, the b1 axis.
        out.kind = QuadricKind::cylindric;
        if (linear_left) {
            out.terminal_kind = QuadricKind::parabolic;
            out.reduced_dim = rank + 1;
        } else if (rank >= 1) {
            out.terminal_kind = center_kind();
            out.reduced_dim = rank;
        } else {
            // a = 0 and b = 0 with c != 0: no point satisfies c = 0.
            out.terminal_kind = QuadricKind::cylindric;
            out.reduced_dim = 0;
        }
    }

    out.canonical = make_canonical(q, red, out.terminal_kind, rank);

    // Empty locus: a definite sum of squares equal to -1, or the collapsed
    // constant equation.
    if (out.reduced_dim == 0) {
        out.empty_locus = true;
    } else if (out.terminal_kind == QuadricKind::elliptic &&
               out.canonical.rhs == CanonicalEquation::Rhs::minus_one) {
        out.empty_locus = true;
    }
    return out;
}

CanonicalEquation canonical_equation(const Quadric& q) {
    return quadric_classify(q).canonical;
}

} // namespace qlin
