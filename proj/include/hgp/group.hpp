#pragma once

#include <array>
#include <string>
#include <vector>

#include "hgp/matrix.hpp"
#include "hgp/params.hpp"
#include "hgp/polynomial.hpp"
#include "hgp/word.hpp"

namespace hgp {

// The four generator matrices in Gen order (A, A^-1, B, B^-1).
struct GeneratorSet {
    std::array<IntMatrix, 4> m;

    const IntMatrix& operator[](Gen g) const { return m[static_cast<std::size_t>(g)]; }
    int dim() const { return m[0].rows; }

    static GeneratorSet from_pair(const IntMatrix& A, const IntMatrix& B);
};

// The hypergeometric group data: companion-matrix generators of the two
// characteristic polynomials, with exact inverses.
struct GroupPresentation {
    int n = 0;  // half-dimension; matrices are 2n x 2n
    ParamTuple alpha, beta;
    IntPoly f, g;
    IntMatrix A, B, Ainv, Binv;

    GeneratorSet generators() const { return GeneratorSet{{A, Ainv, B, Binv}}; }
};

// Companion matrix with 1's on the subdiagonal and the negated coefficient
// list in the last column (constant term in the top entry); its
// characteristic polynomial is p. Requires p monic of degree >= 2.
IntMatrix companion_matrix(const IntPoly& p);

// Validates arity (equal even length >= 4), the parameter condition
// (alpha_j - beta_k never an integer) and Galois-stability, then builds the
// generators and their exact inverses.
GroupPresentation build_group(const ParamTuple& alpha, const ParamTuple& beta);

// Product of the generator matrices, leftmost letter first; the empty word
// evaluates to the identity. Consecutive runs of one letter are computed via
// cached powers.
IntMatrix eval_word(const Word& w, const GeneratorSet& gens);
IntMatrix eval_word(const Word& w, const GroupPresentation& gp);

// A transvection X = 1 + v_R v_L. v_R is primitive with positive first
// nonzero entry; lambda relates v_L to the symplectic form (v_L = lambda *
// v_R^T Omega) and stays 0 until the form is known.
struct Transvection {
    IntMatrix X;
    IntVec v_R;
    IntVec v_L;
    Rat lambda = 0;
};

// Factors X - 1 = v_R v_L; throws Error unless rank(X - 1) = 1.
Transvection transvection_factor(const IntMatrix& X);

// T = A^-1 B, factored. Levelt: always a transvection for hypergeometric
// pairs (A and B differ only in the last column).
Transvection group_transvection(const GeneratorSet& gens);

}  // namespace hgp
