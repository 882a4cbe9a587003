// Acceptance suite: each numbered criterion prints one PASS/FAIL line with
// its runtime; the process exits nonzero when any criterion fails.  All
// tolerances and corpus sizes are pinned here as named constants.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qlin/affine.hpp"
#include "qlin/dual.hpp"
#include "qlin/euclid.hpp"
#include "qlin/io.hpp"
#include "qlin/operators.hpp"
#include "qlin/quadform.hpp"
#include "testutil.hpp"

using namespace qlin;
using testutil::Rng;

namespace {

// Pinned gates.
constexpr double kTransitionBudgetSeconds = 5.0;   // criterion 1
constexpr double kJordanBudgetSeconds = 30.0;      // criterion 3
constexpr double kJacobiResidualGate = 1e-10;      // criterion 7
constexpr double kPathAgreementTol = 1e-8;         // criterion 7
constexpr double kRotationReconstructTol = 1e-12;  // criterion 7
constexpr double kQuadricFloatTol = 1e-9;          // criterion 8

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (detail.empty())
            detail = why;
    }
};

// ---------------------------------------------------------------- criterion 1

Outcome transition_calculus() {
    Outcome out;
    Rng rng(101);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int it = 0; it < 500 && out.ok; ++it) {
        std::size_t n = dim(rng);
        Basis old_basis(testutil::rnd_invertible(rng, n));
        Basis new_basis(testutil::rnd_invertible(rng, n));
        Transition tr = transition(old_basis, new_basis);
        if (tr.s * tr.t != Matrix::identity(n) || tr.t * tr.s != Matrix::identity(n)) {
            out.fail("S*T differs from the identity at iteration " + std::to_string(it));
            break;
        }
        for (int k = 0; k < 3; ++k) {
            Matrix x = testutil::rnd_matrix(rng, n, 1);
            Matrix there = change_coordinates(x, tr, Direction::old_to_new);
            if (change_coordinates(there, tr, Direction::new_to_old) != x) {
                out.fail("coordinate round trip broke at iteration " + std::to_string(it));
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 2

Outcome dimension_laws() {
    Outcome out;
    Rng rng(102);
    std::uniform_int_distribution<std::size_t> dim(1, 6);

    // Grassmann: dim(U + W) + dim(U meet W) = dim U + dim W.
    for (int it = 0; it < 500 && out.ok; ++it) {
        std::size_t n = dim(rng);
        std::uniform_int_distribution<std::size_t> gens(0, n);
        Subspace u = testutil::rnd_subspace(rng, gens(rng), n);
        Subspace w = testutil::rnd_subspace(rng, gens(rng), n);
        SumIntersection si = sum_and_intersection(u, w);
        if (si.sum.dim() + si.intersection.dim() != u.dim() + w.dim())
            out.fail("Grassmann identity failed at iteration " + std::to_string(it));
        else if (!si.sum.contains(u) || !si.sum.contains(w) ||
                 !u.contains(si.intersection) || !w.contains(si.intersection))
            out.fail("sum/intersection witnesses failed at iteration " + std::to_string(it));
    }

    // Quotient law: V/U has dimension n - dim U, witnessed by the
    // representatives reducing to the unit columns.
    for (int it = 0; it < 500 && out.ok; ++it) {
        std::size_t n = dim(rng);
        std::uniform_int_distribution<std::size_t> gens(0, n);
        Subspace u = testutil::rnd_subspace(rng, gens(rng), n);
        QuotientBasis qb(u);
        if (qb.quotient_dim() != n - u.dim()) {
            out.fail("quotient dimension law failed at iteration " + std::to_string(it));
            break;
        }
        Matrix reps = qb.coset_reps();
        for (std::size_t j = 0; j < qb.quotient_dim(); ++j) {
            Matrix e = qb.reduce(reps.col(j));
            for (std::size_t i = 0; i < qb.quotient_dim(); ++i)
                if (e(i, 0) != (i == j ? Rational(1) : Rational(0)))
                    out.fail("coset representatives are not unit cosets");
        }
        if (u.dim() > 0) {
            Matrix member = u.col_basis() * testutil::rnd_matrix(rng, u.dim(), 1);
            if (!qb.reduce(member).is_zero())
                out.fail("subspace member has a nonzero coset");
        }
    }

    // Rank plus nullity.
    for (int it = 0; it < 500 && out.ok; ++it) {
        Matrix f = testutil::rnd_matrix(rng, dim(rng), dim(rng));
        KernelImage ki = kernel_image(f);
        if (ki.kernel.dim() + ki.image.dim() != f.cols())
            out.fail("rank-nullity failed at iteration " + std::to_string(it));
        else if (ki.kernel.dim() > 0 && !(f * ki.kernel.col_basis()).is_zero())
            out.fail("kernel witness failed at iteration " + std::to_string(it));
    }

    // Annihilator law: dim ann(U) = n - dim U, with the pairing vanishing.
    for (int it = 0; it < 500 && out.ok; ++it) {
        std::size_t n = dim(rng);
        std::uniform_int_distribution<std::size_t> gens(0, n);
        Subspace u = testutil::rnd_subspace(rng, gens(rng), n);
        DualSubspace ann = annihilator(u);
        if (ann.dim() != n - u.dim())
            out.fail("annihilator law failed at iteration " + std::to_string(it));
        else if (ann.dim() > 0 && u.dim() > 0 &&
                 !(ann.row_basis() * u.col_basis()).is_zero())
            out.fail("annihilator pairing failed at iteration " + std::to_string(it));
    }

    // Form-relative law: dim U + dim U^perp = n + dim(Ker g meet U).
    for (int it = 0; it < 500 && out.ok; ++it) {
        std::size_t n = dim(rng);
        std::uniform_int_distribution<std::size_t> gens(0, n);
        QuadraticForm g(testutil::rnd_symmetric(rng, n));
        Subspace u = testutil::rnd_subspace(rng, gens(rng), n);
        Subspace comp = orthocomp_form(g, u);
        std::size_t overlap =
            sum_and_intersection(form_kernel(g), u).intersection.dim();
        if (u.dim() + comp.dim() != n + overlap)
            out.fail("form-relative law failed at iteration " + std::to_string(it));
        else if (u.dim() > 0 && comp.dim() > 0 &&
                 !(comp.row_basis() * g.matrix() * u.col_basis()).is_zero())
            out.fail("orthogonality witness failed at iteration " + std::to_string(it));
    }

    return out;
}

// ---------------------------------------------------------------- criterion 3

Outcome jordan_correctness() {
    Outcome out;
    Rng rng(103);
    const std::vector<Rational> pool{Rational(-2), Rational(-1), Rational(0),
                                     Rational(1, 2), Rational(3)};
    for (int it = 0; it < 300 && out.ok; ++it) {
        auto layout = testutil::rnd_jordan_layout(rng, 8, pool);
        Matrix j = testutil::jordan_layout_matrix(layout);
        Matrix t0 = testutil::rnd_invertible(rng, j.rows());
        LinearOperator f(t0 * j * inverse(t0));

        JordanDecomposition jd = jordan_form(f);
        std::vector<std::pair<Rational, std::size_t>> got;
        for (const auto& blk : jd.blocks)
            got.emplace_back(blk.eigenvalue, blk.size);
        if (testutil::sorted_blocks(got) != testutil::sorted_blocks(layout)) {
            out.fail("block multiset mismatch at iteration " + std::to_string(it));
            break;
        }
        if (inverse(jd.t) * f.matrix() * jd.t != jd.j) {
            out.fail("conjugation is not exact at iteration " + std::to_string(it));
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 4

Outcome hamilton_cayley() {
    Outcome out;
    Rng rng(104);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int it = 0; it < 300 && out.ok; ++it) {
        std::size_t n = dim(rng);
        LinearOperator f(testutil::rnd_matrix(rng, n, n));
        if (!hamilton_cayley_check(f).is_zero())
            out.fail("P(F) != 0 at iteration " + std::to_string(it));
    }
    return out;
}

// ---------------------------------------------------------------- criterion 5

Outcome law_of_inertia() {
    Outcome out;
    Rng rng(105);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int form_idx = 0; form_idx < 50 && out.ok; ++form_idx) {
        std::size_t n = dim(rng);
        QuadraticForm g(testutil::rnd_symmetric(rng, n));
        Signature sig = signature(g);
        if (sylvester_positive(g).positive != (sig == Signature{0, n, 0})) {
            out.fail("Sylvester flag disagrees with the signature on form " +
                     std::to_string(form_idx));
            break;
        }
        for (int c = 0; c < 100; ++c) {
            QuadraticForm h = congruence_transform(g, testutil::rnd_invertible(rng, n));
            if (signature(h) != sig) {
                out.fail("signature moved under congruence on form " +
                         std::to_string(form_idx));
                break;
            }
            if (sylvester_positive(h).positive != (sig == Signature{0, n, 0})) {
                out.fail("Sylvester flag moved under congruence on form " +
                         std::to_string(form_idx));
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 6

Outcome duality_identities() {
    Outcome out;
    Rng rng(106);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int it = 0; it < 200 && out.ok; ++it) {
        Matrix f = testutil::rnd_matrix(rng, dim(rng), dim(rng));
        ConjugateMap cm = conjugate_map(f);
        if (!cm.kernel_is_image_annihilator)
            out.fail("Ker f* != ann(Im f) at iteration " + std::to_string(it));
        else if (!cm.image_is_kernel_annihilator)
            out.fail("Im f* != ann(Ker f) at iteration " + std::to_string(it));
        else if (!cm.kernel_from_dual_image)
            out.fail("Ker f != ann(Im f*) at iteration " + std::to_string(it));
        else if (!cm.image_from_dual_kernel)
            out.fail("Im f != ann(Ker f*) at iteration " + std::to_string(it));
    }
    return out;
}

// ---------------------------------------------------------------- criterion 7

double jacobi_residual(const Matrix& f, const JacobiResult& r) {
    const std::size_t n = f.rows();
    std::vector<double> fd = f.to_doubles();
    double worst = 0.0;
    for (std::size_t k = 0; k < r.values.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) {
            double res = -r.values[k] * r.vectors[k][i];
            for (std::size_t j = 0; j < n; ++j)
                res += fd[i * n + j] * r.vectors[k][j];
            worst = std::max(worst, std::fabs(res));
        }
    return worst;
}

Outcome euclidean_float_gates() {
    Outcome out;
    Rng rng(107);

    // Jacobi residual gate on random symmetric matrices, n <= 8.
    std::uniform_int_distribution<std::size_t> dim(2, 8);
    for (int it = 0; it < 100 && out.ok; ++it) {
        Matrix f = testutil::rnd_symmetric(rng, dim(rng));
        JacobiResult r = jacobi_eigen(f.to_doubles(), f.rows());
        double res = jacobi_residual(f, r);
        if (res > kJacobiResidualGate)
            out.fail("Jacobi residual " + std::to_string(res) + " exceeds 1e-10");
    }

    // Rational spectra: exact path and Jacobi agree within 1e-8.
    for (int it = 0; it < 100 && out.ok; ++it) {
        std::size_t n = dim(rng);
        Matrix q = testutil::rnd_special_orthogonal(rng, n);
        std::vector<Rational> d(n);
        for (auto& x : d)
            x = testutil::rnd_rational(rng);
        Matrix f = q * Matrix::diagonal(d) * q.transpose();

        SpectralDecomposition exact =
            selfadjoint_spectrum(f, EuclideanStructure::standard(n), false);
        if (!exact.exact) {
            out.fail("constructed rational spectrum was not recognized as exact");
            break;
        }
        std::vector<double> exact_values;
        for (const auto& [lambda, basis] : exact.eigenpairs)
            for (std::size_t k = 0; k < basis.cols(); ++k)
                exact_values.push_back(lambda.to_double());
        std::sort(exact_values.begin(), exact_values.end());

        JacobiResult jr = jacobi_eigen(f.to_doubles(), n);
        for (std::size_t k = 0; k < n; ++k)
            if (std::fabs(jr.values[k] - exact_values[k]) > kPathAgreementTol)
                out.fail("exact and float eigenvalues disagree beyond 1e-8");
    }

    // Rotation reconstruction within 1e-12 on Cayley-generated rotations,
    // with the exact axis equation in dimension 3.
    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
        for (int it = 0; it < 100 && out.ok; ++it) {
            Matrix f = testutil::rnd_special_orthogonal(rng, n);
            RotationForm rf = rotation_canonical(f);

            std::vector<double> fd = f.to_doubles();
            std::vector<double> rebuilt(n * n, 0.0);
            // frame * canonical * frame^t, row-major.
            std::vector<double> tmp(n * n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t j = 0; j < n; ++j)
                        tmp[i * n + j] += rf.frame[i * n + k] * rf.canonical[k * n + j];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t j = 0; j < n; ++j)
                        rebuilt[i * n + j] += tmp[i * n + k] * rf.frame[j * n + k];
            double worst = 0.0;
            for (std::size_t i = 0; i < n * n; ++i)
                worst = std::max(worst, std::fabs(rebuilt[i] - fd[i]));
            if (worst > kRotationReconstructTol) {
                out.fail("rotation reconstruction off by " + std::to_string(worst) +
                         " in dimension " + std::to_string(n));
                break;
            }
            if (n == 3 && f * rf.axis != rf.axis) {
                out.fail("axis is not fixed exactly in dimension 3");
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 8

// Centered synthesis: q(x) = (x - rho)^t a (x - rho) + r, so the reduction
// constants are controlled exactly.
Quadric synth(const Matrix& a, const Matrix& rho, const Matrix& b_kernel,
              const Rational& r) {
    Matrix b = Rational(-1) * (a * rho) + b_kernel;
    Rational c = (rho.transpose() * a * rho)(0, 0) -
                 Rational(2) * (b_kernel.transpose() * rho)(0, 0) + r;
    // evaluate at rho gives r when b_kernel = 0; the kernel part adds its
    // own linear term 2 b_kernel^t x untouched by the shift.
    return Quadric(a, b, c);
}

// Nonzero rationals of mixed magnitude for diagonal seeds.
Rational seed_value(Rng& rng) {
    Rational v = testutil::rnd_nonzero_rational(rng);
    return v;
}

Matrix definite_matrix(Rng& rng, std::size_t n, bool exact_spectrum, int sign) {
    if (exact_spectrum) {
        Matrix q = testutil::rnd_special_orthogonal(rng, n);
        std::vector<Rational> d(n);
        for (auto& x : d)
            x = Rational(sign) * seed_value(rng).abs();
        return q * Matrix::diagonal(d) * q.transpose();
    }
    Matrix m = testutil::rnd_matrix(rng, n, n);
    Matrix a = m.transpose() * m + Matrix::identity(n);
    return sign > 0 ? a : Rational(-1) * a;
}

Matrix indefinite_matrix(Rng& rng, std::size_t n, bool exact_spectrum) {
    std::vector<Rational> d(n);
    d[0] = seed_value(rng).abs();
    d[1] = -seed_value(rng).abs();
    for (std::size_t k = 2; k < n; ++k)
        d[k] = seed_value(rng);
    while (true) {
        Matrix s = exact_spectrum ? testutil::rnd_special_orthogonal(rng, n)
                                  : testutil::rnd_invertible(rng, n);
        Matrix a = exact_spectrum ? s * Matrix::diagonal(d) * s.transpose()
                                  : s.transpose() * Matrix::diagonal(d) * s;
        Signature sig = signature(QuadraticForm(a));
        if (sig.s == 0 && sig.r_p > 0 && sig.r_n > 0)
            return a;
    }
}

// Rank-deficient symmetric matrix with an exactly known rational kernel.
Matrix deficient_matrix(Rng& rng, std::size_t n, std::size_t rank, bool exact_spectrum,
                        Matrix* kernel_vector) {
    std::vector<Rational> d(n, Rational(0));
    for (std::size_t k = 0; k < rank; ++k)
        d[k] = seed_value(rng);
    if (exact_spectrum) {
        Matrix q = testutil::rnd_special_orthogonal(rng, n);
        *kernel_vector = q.col(n - 1);
        return q * Matrix::diagonal(d) * q.transpose();
    }
    Matrix s = testutil::rnd_invertible(rng, n);
    // Ker(s^t D s) = s^{-1} Ker D.
    *kernel_vector = inverse(s) * Matrix::identity(n).col(n - 1);
    return s.transpose() * Matrix::diagonal(d) * s;
}

struct ClassKey {
    QuadricKind kind, terminal;
    std::size_t reduced_dim;
    bool empty;
    bool exact;
    CanonicalEquation::Rhs rhs;
    Signature sig;
};

ClassKey key_of(const QuadricClass& qc) {
    return {qc.kind, qc.terminal_kind, qc.reduced_dim, qc.empty_locus,
            qc.canonical.exact, qc.canonical.rhs, qc.signature_a};
}

bool same_key(const ClassKey& a, const ClassKey& b) {
    return a.kind == b.kind && a.terminal == b.terminal &&
           a.reduced_dim == b.reduced_dim && a.empty == b.empty &&
           a.exact == b.exact && a.rhs == b.rhs && a.sig == b.sig;
}

bool same_terms(const CanonicalEquation& a, const CanonicalEquation& b) {
    if (a.exact != b.exact)
        return false;
    if (a.exact) {
        std::vector<Rational> x = a.exact_terms, y = b.exact_terms;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    }
    if (a.terms.size() != b.terms.size())
        return false;
    std::vector<double> x = a.terms, y = b.terms;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (std::size_t k = 0; k < x.size(); ++k)
        if (std::fabs(x[k] - y[k]) > kQuadricFloatTol)
            return false;
    return true;
}

Outcome quadric_invariance() {
    Outcome out;
    Rng rng(108);
    std::uniform_int_distribution<int> coin(0, 1);

    auto check_seed = [&](const Quadric& q, QuadricKind expected_kind,
                          const char* label) {
        QuadricClass base = quadric_classify(q);
        if (base.kind != expected_kind) {
            out.fail(std::string("seed construction for ") + label +
                     " produced kind " + to_string(base.kind));
            return;
        }
        for (int rep = 0; rep < 2; ++rep) {
            std::size_t n = q.dim();
            Frame frame(testutil::rnd_matrix(rng, n, 1),
                        Basis(testutil::rnd_special_orthogonal(rng, n)));
            Quadric moved = quadric_transform(q, Frame::standard(n), frame);
            QuadricClass got = quadric_classify(moved);
            if (!same_key(key_of(got), key_of(base))) {
                out.fail(std::string("classification moved under a frame change (") +
                         label + ")");
                return;
            }
            if (!same_terms(got.canonical, base.canonical)) {
                out.fail(std::string("canonical terms moved under a frame change (") +
                         label + ")");
                return;
            }
        }
    };

    // 15 seeds per dimension per kind: 45 seeds per kind, dims 2..4.
    for (std::size_t n = 2; n <= 4 && out.ok; ++n) {
        for (int k = 0; k < 15 && out.ok; ++k) {
            bool exact = coin(rng) == 1;
            Matrix rho = testutil::rnd_matrix(rng, n, 1);
            Matrix no_kernel(n, 1);

            // Elliptic: definite quadratic part, nonzero residual.
            Matrix pos = definite_matrix(rng, n, exact, coin(rng) ? 1 : -1);
            check_seed(synth(pos, rho, no_kernel, testutil::rnd_nonzero_rational(rng)),
                       QuadricKind::elliptic, "elliptic");
            if (!out.ok)
                break;

            // Hyperbolic: indefinite invertible part, nonzero residual.
            Matrix ind = indefinite_matrix(rng, n, exact);
            check_seed(synth(ind, rho, no_kernel, testutil::rnd_nonzero_rational(rng)),
                       QuadricKind::hyperbolic, "hyperbolic");
            if (!out.ok)
                break;

            // Conic: invertible part, residual exactly zero.
            Matrix conic_part = coin(rng) ? indefinite_matrix(rng, n, exact)
                                          : definite_matrix(rng, n, exact, 1);
            check_seed(synth(conic_part, rho, no_kernel, Rational(0)),
                       QuadricKind::conic, "conic");
            if (!out.ok)
                break;

            // Parabolic: nullity one, kernel component in the linear part.
            Matrix kvec;
            Matrix par = deficient_matrix(rng, n, n - 1, exact, &kvec);
            Matrix bk = testutil::rnd_nonzero_rational(rng) * kvec;
            check_seed(synth(par, rho, bk, testutil::rnd_rational(rng)),
                       QuadricKind::parabolic, "parabolic");
            if (!out.ok)
                break;

            // Cylindric: either a centered deficient quadric or, in higher
            // dimensions, nullity two with a surviving linear part.
            std::uniform_int_distribution<std::size_t> rk(1, n - 1);
            Matrix cyl_kvec;
            if (n >= 3 && coin(rng)) {
                Matrix cyl = deficient_matrix(rng, n, n - 2, exact, &cyl_kvec);
                Matrix cyl_b = testutil::rnd_nonzero_rational(rng) * cyl_kvec;
                check_seed(synth(cyl, rho, cyl_b, testutil::rnd_rational(rng)),
                           QuadricKind::cylindric, "cylindric");
            } else {
                Matrix cyl = deficient_matrix(rng, n, rk(rng), exact, &cyl_kvec);
                check_seed(synth(cyl, rho, Matrix(n, 1), testutil::rnd_rational(rng)),
                           QuadricKind::cylindric, "cylindric");
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 9

#ifndef QLIN_CLI_PATH
#error "QLIN_CLI_PATH must be defined"
#endif

std::string read_file(const std::string& path, bool* ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        *ok = false;
        return "";
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    *ok = true;
    return buf.str();
}

std::string expand_fixtures(std::string s) {
    const std::string placeholder = "{F}";
    for (std::size_t at = s.find(placeholder); at != std::string::npos;
         at = s.find(placeholder))
        s.replace(at, placeholder.size(), QLIN_FIXTURE_DIR);
    return s;
}

Outcome cli_contract() {
    Outcome out;
    bool ok = false;
    std::string manifest = read_file(std::string(QLIN_GOLDEN_DIR) + "/manifest.txt", &ok);
    if (!ok) {
        out.fail("missing golden manifest");
        return out;
    }

    int cases = 0;
    std::istringstream lines(manifest);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::size_t p1 = line.find('|');
        std::size_t p2 = line.find('|', p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos) {
            out.fail("malformed manifest line: " + line);
            return out;
        }
        std::string name = line.substr(0, p1);
        int expected_exit = std::stoi(line.substr(p1 + 1, p2 - p1 - 1));
        std::string args = expand_fixtures(line.substr(p2 + 1));

        std::string cmd = std::string(QLIN_CLI_PATH) + " " + args + " 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) {
            out.fail("failed to launch: " + cmd);
            return out;
        }
        std::string output;
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
            output.append(buf, got);
        int status = pclose(pipe);
        int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

        bool gok = false;
        std::string golden =
            read_file(std::string(QLIN_GOLDEN_DIR) + "/" + name + ".txt", &gok);
        if (!gok) {
            out.fail("missing golden file for " + name);
            return out;
        }
        if (exit_code != expected_exit) {
            out.fail(name + ": exit " + std::to_string(exit_code) + ", expected " +
                     std::to_string(expected_exit));
            return out;
        }
        if (output != golden) {
            out.fail(name + ": output differs from the golden file");
            return out;
        }
        ++cases;
    }
    if (cases < 20)
        out.fail("only " + std::to_string(cases) + " golden cases, need 20");
    return out;
}

// --------------------------------------------------------------------- driver

int run_all() {
    struct Criterion {
        const char* name;
        Outcome (*fn)();
        double budget_seconds; // 0 = untimed
    };
    const Criterion table[] = {
        {"transition calculus, 500 exact round trips", transition_calculus,
         kTransitionBudgetSeconds},
        {"dimension laws, 5 x 500 exact instances", dimension_laws, 0},
        {"jordan forms, 300 layouts up to n = 8", jordan_correctness,
         kJordanBudgetSeconds},
        {"hamilton-cayley, 300 operators up to n = 6", hamilton_cayley, 0},
        {"law of inertia, 50 forms x 100 congruences", law_of_inertia, 0},
        {"duality identities, 200 rectangular maps", duality_identities, 0},
        {"euclidean float gates (jacobi, agreement, rotations)",
         euclidean_float_gates, 0},
        {"quadric invariance, 5 kinds x 45 seeds, dims 2-4", quadric_invariance, 0},
        {"cli contract, golden byte-exact fixtures", cli_contract, 0},
    };

    int failed = 0;
    int index = 0;
    for (const auto& c : table) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out.fail(std::string("unexpected exception: ") + e.what());
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (c.budget_seconds > 0 && seconds > c.budget_seconds)
            out.fail("runtime " + std::to_string(seconds) + " s over the " +
                     std::to_string(c.budget_seconds) + " s budget");
        std::printf("%d. %-52s %s  (%.2f s)\n", index, c.name,
                    out.ok ? "PASS" : "FAIL", seconds);
        if (!out.ok) {
            std::printf("   -> %s\n", out.detail.c_str());
            ++failed;
        }
    }
    std::printf("%d of 9 criteria passed\n", 9 - failed);
    return failed;
}

} // namespace

int main() { return run_all(); }
