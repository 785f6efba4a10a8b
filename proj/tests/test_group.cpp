#include <doctest.h>

#include "hgp/catalog.hpp"
#include "hgp/group.hpp"
#include "support.hpp"

using namespace hgp;
using namespace testsupport;

TEST_CASE("companion_matrix: convention") {
    // x^2 - 3x + 1: subdiagonal 1, negated coefficients in the last column.
    CHECK(companion_matrix(IntPoly({Int(1), Int(-3), Int(1)})) == mat_from({{0, -1}, {1, 3}}));
    // (x-1)^2 = x^2 - 2x + 1
    CHECK(companion_matrix(IntPoly({Int(1), Int(-2), Int(1)})) == mat_from({{0, -1}, {1, 2}}));
    CHECK_THROWS_AS(companion_matrix(IntPoly({Int(1), Int(2)})), Error);          // degree 1
    CHECK_THROWS_AS(companion_matrix(IntPoly({Int(1), Int(0), Int(2)})), Error);  // not monic
}

TEST_CASE("companion_matrix: characteristic polynomial reproduces the input") {
    const IntPoly p = build_char_poly(parse_rational_tuple("0,0,0,0,0,0"));  // (x-1)^6
    const LPoly charpoly = naive_charpoly(companion_matrix(p));
    CHECK(poly_equals(p, charpoly));

    const IntPoly q = build_char_poly(parse_rational_tuple("1/3,2/3,1/12,5/12,7/12,11/12"));
    CHECK(poly_equals(q, naive_charpoly(companion_matrix(q))));
}

TEST_CASE("build_group: A-24 parameters") {
    const GroupPresentation gp = build_group(
        parse_rational_tuple("0,0,0,0,0,0"),
        parse_rational_tuple("1/3,2/3,1/12,5/12,7/12,11/12"));
    CHECK(gp.n == 3);
    CHECK(gp.A.rows == 6);
    const Int da = det(gp.A);
    const Int db = det(gp.B);
    CHECK((da == 1 || da == -1));
    CHECK((db == 1 || db == -1));
    CHECK(mat_mul(gp.A, gp.Ainv) == IntMatrix::identity(6));
    CHECK(mat_mul(gp.B, gp.Binv) == IntMatrix::identity(6));
}

TEST_CASE("build_group: rejected inputs") {
    const ParamTuple mum6 = parse_rational_tuple("0,0,0,0,0,0");
    CHECK_THROWS_AS(build_group(mum6, mum6), Error);  // parameter condition
    CHECK_THROWS_AS(build_group(parse_rational_tuple("0,0"), parse_rational_tuple("1/2,1/2")),
                    Error);  // n >= 2 required
    CHECK_THROWS_AS(build_group(parse_rational_tuple("0,0,0"),
                                parse_rational_tuple("1/2,1/2,1/2")),
                    Error);  // odd length
    CHECK_THROWS_AS(build_group(mum6, parse_rational_tuple("1/2,1/2")), Error);  // arity mismatch
    CHECK_THROWS_AS(build_group(mum6, parse_rational_tuple("1/3,1/3,1/3,1/3,1/3,1/3")),
                    Error);  // not Galois-stable
}

TEST_CASE("every catalog pair builds with unimodular generators") {
    for (const CatalogEntry& e : catalog()) {
        const ResolvedParams rp = resolve_entry(e);
        const GroupPresentation gp = build_group(rp.alpha, rp.beta);
        const Int da = det(gp.A);
        const Int db = det(gp.B);
        CHECK((da == 1 || da == -1));
        CHECK((db == 1 || db == -1));
    }
}

TEST_CASE("transvection_factor: rank-one factorization") {
    // X = 1 + e1 (0,0,0,0,0,5)
    IntMatrix x = IntMatrix::identity(6);
    x.at(0, 5) = 5;
    const Transvection t = transvection_factor(x);
    CHECK(t.v_R == vec_from({1, 0, 0, 0, 0, 0}));
    CHECK(t.v_L == vec_from({0, 0, 0, 0, 0, 5}));

    CHECK_THROWS_AS(transvection_factor(IntMatrix::identity(6)), Error);  // rank 0
    IntMatrix r2 = IntMatrix::identity(4);
    r2.at(0, 1) = 1;
    r2.at(1, 0) = 1;  // X - 1 has rank 2
    CHECK_THROWS_AS(transvection_factor(r2), Error);

    // Sign normalization: v_R's first nonzero entry is positive.
    IntMatrix neg = IntMatrix::identity(4);
    neg.at(2, 0) = -3;
    const Transvection tn = transvection_factor(neg);
    CHECK(tn.v_R == vec_from({0, 0, 1, 0}));
    CHECK(tn.v_L == vec_from({-3, 0, 0, 0}));
}

TEST_CASE("T = A^-1 B is a transvection for every catalog group") {
    for (const CatalogEntry& e : catalog()) {
        const ResolvedParams rp = resolve_entry(e);
        const GroupPresentation gp = build_group(rp.alpha, rp.beta);
        const GeneratorSet gens = gp.generators();
        const Transvection t = group_transvection(gens);
        // Unipotence and exact reconstruction of T - 1 = v_R v_L.
        CHECK(dot(t.v_L, t.v_R) == 0);
        const int dim = 2 * gp.n;
        CHECK(mat_sub(t.X, IntMatrix::identity(dim)) == outer(t.v_R, t.v_L));
    }
}
