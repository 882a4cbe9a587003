#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlin/errors.hpp"
#include "qlin/subspace.hpp"
#include "testutil.hpp"

using namespace qlin;
using testutil::Rng;

TEST_CASE("span builds the canonical reduced basis") {
    Subspace u = Subspace::span_rows(Matrix({{1, 1}, {1, -1}}));
    CHECK(u.dim() == 2);
    CHECK(u.row_basis() == Matrix::identity(2));

    Subspace line = Subspace::span_rows(Matrix({{1, 2}, {2, 4}}));
    CHECK(line.dim() == 1);
    CHECK(line.row_basis() == Matrix({{1, 2}}));
    CHECK(line.ambient() == 2);
    REQUIRE(line.pivots().size() == 1);
    CHECK(line.pivots()[0] == 0);

    CHECK(Subspace::zero(3).dim() == 0);
    CHECK(Subspace::full(3).row_basis() == Matrix::identity(3));
    CHECK(Subspace::span_cols(Matrix({{1, 2}, {2, 4}})) ==
          Subspace::span_rows(Matrix({{1, 2}})));
}

TEST_CASE("canonical basis is independent of the generating set") {
    Rng rng(4001);
    for (int it = 0; it < 100; ++it) {
        Matrix g = testutil::rnd_matrix(rng, 3, 4);
        Subspace u = Subspace::span_rows(g);
        // Shuffle rows and mix in row operations: same span, same basis.
        Matrix mixed = vcat(g.row(2) + g.row(0), vcat(g.row(1), g.row(0)));
        Matrix doubled = vcat(g, Rational(3) * g.row(1));
        REQUIRE(Subspace::span_rows(mixed) == u);
        REQUIRE(Subspace::span_rows(doubled) == u);
        for (std::size_t i = 0; i < g.rows(); ++i)
            REQUIRE(u.contains(g.row(i).transpose()));
    }
}

TEST_CASE("membership") {
    Subspace u = Subspace::span_rows(Matrix({{1, 0, 1}}));
    CHECK(u.contains(Matrix({{2}, {0}, {2}})));
    CHECK_FALSE(u.contains(Matrix({{1}, {0}, {0}})));
    CHECK(u.contains(Subspace::zero(3)));
    CHECK(Subspace::full(3).contains(u));
    CHECK_FALSE(u.contains(Subspace::full(3)));
}

TEST_CASE("basis completion appends standard vectors at non-pivots") {
    Subspace u = Subspace::span_rows(Matrix({{1, 1, 0}}));
    Basis b = complete_basis(u);
    CHECK(b.vectors() == Matrix({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
    CHECK(b.vectors().col(0) == u.col_basis());

    Rng rng(4002);
    for (int it = 0; it < 100; ++it) {
        Subspace w = testutil::rnd_subspace(rng, 3, 5);
        Basis full = complete_basis(w);
        REQUIRE(det(full.vectors()) != Rational(0));
        for (std::size_t j = 0; j < w.dim(); ++j)
            REQUIRE(w.contains(full.vector(j)));
    }
}

TEST_CASE("transitions between bases") {
    Basis old_basis(Matrix({{2, 0}, {0, 1}}));
    Basis new_basis(Matrix({{1, 0}, {0, 1}}));
    Transition tr = transition(old_basis, new_basis);
    // New basis vectors in old coordinates: e1 = (1/2) * (2,0).
    CHECK(tr.s == Matrix({{Rational(1, 2), 0}, {0, 1}}));
    CHECK(tr.t == Matrix({{2, 0}, {0, 1}}));
    CHECK(tr.s * tr.t == Matrix::identity(2));

    // A point with old coordinates (2, 1) has new coordinates (4, 1)
    // since the old first basis vector is twice the new one.
    Matrix coords({{2}, {1}});
    CHECK(change_coordinates(coords, tr, Direction::old_to_new) == Matrix({{4}, {1}}));
    CHECK(change_coordinates(Matrix({{4}, {1}}), tr, Direction::new_to_old) == coords);

    Rng rng(4003);
    for (int it = 0; it < 100; ++it) {
        Basis a(testutil::rnd_invertible(rng, 4));
        Basis b(testutil::rnd_invertible(rng, 4));
        Transition t = transition(a, b);
        REQUIRE(t.s * t.t == Matrix::identity(4));
        // Both bases name the same vectors: a.vectors * s = b.vectors.
        REQUIRE(a.vectors() * t.s == b.vectors());
        Matrix x = testutil::rnd_matrix(rng, 4, 1);
        REQUIRE(change_coordinates(change_coordinates(x, t, Direction::old_to_new),
                                   t, Direction::new_to_old) == x);
    }
}

TEST_CASE("sum and intersection") {
    Subspace u = Subspace::span_rows(Matrix({{1, 0, 0}, {0, 1, 0}}));
    Subspace w = Subspace::span_rows(Matrix({{0, 1, 0}, {0, 0, 1}}));
    SumIntersection si = sum_and_intersection(u, w);
    CHECK(si.sum == Subspace::full(3));
    CHECK(si.intersection == Subspace::span_rows(Matrix({{0, 1, 0}})));

    Rng rng(4004);
    for (int it = 0; it < 300; ++it) {
        std::uniform_int_distribution<std::size_t> gens(0, 4);
        Subspace a = testutil::rnd_subspace(rng, gens(rng), 5);
        Subspace b = testutil::rnd_subspace(rng, gens(rng), 5);
        SumIntersection r = sum_and_intersection(a, b);
        REQUIRE(r.sum.dim() + r.intersection.dim() == a.dim() + b.dim());
        REQUIRE(r.sum.contains(a));
        REQUIRE(r.sum.contains(b));
        REQUIRE(a.contains(r.intersection));
        REQUIRE(b.contains(r.intersection));
        REQUIRE(sum_and_intersection(b, a).sum == r.sum);
        REQUIRE(sum_and_intersection(b, a).intersection == r.intersection);
    }
}

TEST_CASE("quotient space coordinates") {
    Subspace u = Subspace::span_rows(Matrix({{1, 0, 0}}));
    QuotientBasis q(u);
    CHECK(q.quotient_dim() == 2);
    CHECK(q.coset_reps() == Matrix({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(q.reduce(Matrix({{5}, {1}, {2}})) == Matrix({{1}, {2}}));

    Rng rng(4005);
    for (int it = 0; it < 100; ++it) {
        Subspace w = testutil::rnd_subspace(rng, 2, 4);
        QuotientBasis qb(w);
        REQUIRE(qb.quotient_dim() == 4 - w.dim());
        Matrix v = testutil::rnd_matrix(rng, 4, 1);
        // Shifting by a subspace member does not move the coset.
        Matrix shift = w.col_basis() * testutil::rnd_matrix(rng, w.dim(), 1);
        REQUIRE(qb.reduce(v + shift) == qb.reduce(v));
        // Members of w reduce to zero.
        REQUIRE(qb.reduce(shift).is_zero());
    }
}

TEST_CASE("kernel and image of a matrix") {
    Matrix f({{1, 2}, {2, 4}});
    KernelImage ki = kernel_image(f);
    CHECK(ki.kernel == Subspace::span_rows(Matrix({{-2, 1}})));
    CHECK(ki.image == Subspace::span_rows(Matrix({{1, 2}})));

    Rng rng(4006);
    for (int it = 0; it < 200; ++it) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        Matrix m = testutil::rnd_matrix(rng, dim(rng), dim(rng));
        KernelImage r = kernel_image(m);
        REQUIRE(r.kernel.dim() + r.image.dim() == m.cols());
        REQUIRE(((m * r.kernel.col_basis()).is_zero() || r.kernel.dim() == 0));
        REQUIRE(r.image == Subspace::span_cols(m));
    }
}

TEST_CASE("map matrix under base change") {
    Rng rng(4007);
    for (int it = 0; it < 100; ++it) {
        Matrix f = testutil::rnd_matrix(rng, 3, 4);
        Transition dom = transition(Basis::standard(4), Basis(testutil::rnd_invertible(rng, 4)));
        Transition cod = transition(Basis::standard(3), Basis(testutil::rnd_invertible(rng, 3)));
        Matrix g = map_change_of_bases(f, dom, cod);
        // Rank is a base-change invariant; the identity transition fixes f.
        REQUIRE(rref(g).rank() == rref(f).rank());
        Transition id_dom = transition(Basis::standard(4), Basis::standard(4));
        Transition id_cod = transition(Basis::standard(3), Basis::standard(3));
        REQUIRE(map_change_of_bases(f, id_dom, id_cod) == f);
    }
}

TEST_CASE("bases displaying a map as identity-plus-zeros") {
    Matrix f({{1, 2}, {2, 4}});
    AlmostDiagonal ad = almost_diagonal(f);
    CHECK(ad.rank == 1);
    CHECK(ad.canonical == Matrix({{1, 0}, {0, 0}}));
    CHECK(ad.codomain.inverse_vectors() * f * ad.domain.vectors() == ad.canonical);

    CHECK_THROWS_AS(almost_diagonal(Matrix(2, 3)), DomainError);

    Rng rng(4008);
    for (int it = 0; it < 100; ++it) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        Matrix m = testutil::rnd_matrix(rng, dim(rng), dim(rng));
        if (m.is_zero())
            continue;
        AlmostDiagonal r = almost_diagonal(m);
        REQUIRE(r.rank == rref(m).rank());
        Matrix c = r.codomain.inverse_vectors() * m * r.domain.vectors();
        REQUIRE(c == r.canonical);
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j)
                REQUIRE(c(i, j) == ((i == j && i < r.rank) ? Rational(1) : Rational(0)));
    }
}
