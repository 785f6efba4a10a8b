#include <doctest.h>

#include <random>

#include "hgp/matrix.hpp"
#include "support.hpp"

using namespace hgp;
using namespace testsupport;

TEST_CASE("mat_mul basics") {
    const IntMatrix m = mat_from({{1, 2}, {3, 4}});
    CHECK(mat_mul(IntMatrix::identity(2), m) == m);
    const IntMatrix j = mat_from({{0, -1}, {1, 0}});
    IntMatrix minus_id = IntMatrix::identity(2);
    minus_id.at(0, 0) = -1;
    minus_id.at(1, 1) = -1;
    CHECK(mat_mul(j, j) == minus_id);
    CHECK_THROWS_AS(mat_mul(m, IntMatrix(3, 3)), Error);
}

TEST_CASE("unimodular_inverse examples") {
    CHECK(unimodular_inverse(IntMatrix::identity(4)) == IntMatrix::identity(4));
    CHECK(unimodular_inverse(mat_from({{1, 1}, {0, 1}})) == mat_from({{1, -1}, {0, 1}}));
    CHECK_THROWS_AS(unimodular_inverse(mat_from({{2, 0}, {0, 1}})), Error);  // det 2
    CHECK_THROWS_AS(unimodular_inverse(mat_from({{1, 1}, {1, 1}})), Error);  // det 0
}

TEST_CASE("rational_nullspace examples") {
    CHECK(rational_nullspace(to_rat(IntMatrix(2, 2))).size() == 2);
    CHECK(rational_nullspace(to_rat(IntMatrix::identity(3))).empty());
    const auto basis = rational_nullspace(to_rat(mat_from({{1, 1}, {2, 2}})));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == vec_from({1, -1}));
}

TEST_CASE("primitive_normalize and independence") {
    CHECK(primitive_normalize(vec_from({-2, -4, 6})) == vec_from({1, 2, -3}));
    CHECK(primitive_normalize(vec_from({0, 5, 10})) == vec_from({0, 1, 2}));
    CHECK_THROWS_AS(primitive_normalize(vec_from({0, 0})), Error);

    CHECK(independent_pair(vec_from({1, 0, 0}), vec_from({0, 1, 0})));
    CHECK(!independent_pair(vec_from({1, 2, 3}), vec_from({2, 4, 6})));
    CHECK(!independent_pair(vec_from({0, 0, 0}), vec_from({1, 2, 3})));
}

TEST_CASE("property: library vs naive oracles on random 4x4 matrices") {
    std::mt19937 rng(20240517);
    for (int iter = 0; iter < 500; ++iter) {
        const IntMatrix m = random_matrix(rng, 4);
        const IntMatrix m2 = random_matrix(rng, 4);

        CHECK(mat_mul(m, m2) == naive_mul(m, m2));
        CHECK(det(m) == naive_det(m));

        const auto basis = rational_nullspace(to_rat(m));
        CHECK(rank(m) + static_cast<int>(basis.size()) == 4);
        for (const IntVec& v : basis) {
            // Exact kernel vector, primitive, first nonzero entry positive.
            CHECK(mat_vec(m, v) == IntVec(4, Int(0)));
            Int g(0);
            for (const Int& x : v) g = int_gcd(g, x);
            CHECK(g == 1);
            for (const Int& x : v) {
                if (x == 0) continue;
                CHECK(x > 0);
                break;
            }
        }
    }
}

TEST_CASE("property: unimodular inverses are exact two-sided inverses") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = (iter % 2 == 0) ? 4 : 6;
        const IntMatrix u = random_unimodular(rng, n);
        CHECK(det(u) == 1);
        const IntMatrix inv = unimodular_inverse(u);
        CHECK(mat_mul(u, inv) == IntMatrix::identity(n));
        CHECK(mat_mul(inv, u) == IntMatrix::identity(n));
    }
}

TEST_CASE("vector helpers") {
    const IntMatrix m = mat_from({{1, 2}, {3, 4}});
    CHECK(mat_vec(m, vec_from({1, 1})) == vec_from({3, 7}));
    CHECK(vec_mat(vec_from({1, 1}), m) == vec_from({4, 6}));
    CHECK(dot(vec_from({1, 2}), vec_from({3, 4})) == 11);
    CHECK_THROWS_AS(dot(vec_from({1}), vec_from({1, 2})), Error);
    CHECK(outer(vec_from({1, 2}), vec_from({3, 4})) == mat_from({{3, 4}, {6, 8}}));
}
