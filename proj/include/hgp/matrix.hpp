#pragma once

#include <string>
#include <vector>

#include "hgp/numeric.hpp"

namespace hgp {

// Dense row-major matrix over arbitrary-precision integers.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Int(0)) {}

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMatrix identity(int n);
    bool is_square() const { return rows == cols; }

    bool operator==(const IntMatrix&) const = default;
};

// Same layout over rationals (entries always canonical).
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

    Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);
IntMatrix outer(const IntVec& col, const IntVec& row);

IntVec mat_vec(const IntMatrix& m, const IntVec& v);
IntVec vec_mat(const IntVec& v, const IntMatrix& m);
Int dot(const IntVec& u, const IntVec& v);

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMatrix& m);

// Exact integer inverse; requires det = +-1, throws Error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

RatMatrix to_rat(const IntMatrix& m);
int rank(const RatMatrix& m);
int rank(const IntMatrix& m);

// Basis of the right nullspace, computed by rational Gauss-Jordan elimination
// with first-nonzero pivoting. Each basis vector is scaled to integer entries
// with gcd 1 and positive first nonzero entry; the list is empty when the
// nullspace is trivial.
std::vector<IntVec> rational_nullspace(const RatMatrix& m);

// Divides by the gcd and flips sign so the first nonzero entry is positive.
// Throws Error on the zero vector.
IntVec primitive_normalize(IntVec v);

// True iff u and v span a 2-dimensional space (some 2x2 minor is nonzero).
bool independent_pair(const IntVec& u, const IntVec& v);

std::string matrix_str(const IntMatrix& m);

}  // namespace hgp
