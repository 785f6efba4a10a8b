#pragma once

#include <string>

#include "hgp/invform.hpp"
#include "hgp/orbitsearch.hpp"

namespace hgp {

// An arithmeticity certificate: parameters plus a conjugating word gamma such
// that T and gamma T gamma^-1 are independent Omega-orthogonal transvections.
struct Certificate {
    std::string label;  // optional
    ParamTuple alpha, beta;
    Word gamma;
};

struct VerificationReport {
    bool transvection_ok = false;
    Int orthogonality_value = 0;  // v_L gamma v_R
    bool independent = false;
    int form_dimension = 0;
    Rat lambda = 0;
    bool pass = false;
    std::string reason;  // empty on pass
};

// Runs the full check on a generator pair: T = A^-1 B is a transvection,
// v_L gamma v_R = 0, v_R and gamma v_R independent, invariant-form space
// 1-dimensional. A pass proves arithmeticity given Zariski density, which is
// recorded as an assumption in the serialized report, not verified.
VerificationReport verify_pair(const GeneratorSet& gens, const Word& gamma);
VerificationReport verify_pair(const IntMatrix& A, const IntMatrix& B, const Word& gamma);

// Builds the group from the certificate parameters and verifies; group
// construction errors propagate as Error.
VerificationReport check_certificate(const Certificate& c);

// The executable content of the criterion's sufficiency proof: R, built from
// integer powers of X_1 = T and X_2 = gamma T gamma^-1, restricts to a
// transvection of W = span(x_1,x_2,x_3) along W intersect W-perp.
struct WitnessReport {
    IntVec x1, x2, x3;  // W basis; x3 = gamma' x1 for a short word gamma'
    Word gamma_prime;
    Int a = 0, b = 0;  // R = X_1^a X_2^{-b}
    IntMatrix R;
    IntVec direction;  // Omega(x2,x3) x1 - Omega(x1,x3) x2
};

// Requires a passing certificate. Finds x3 = gamma' v_R by BFS such that
// Omega(x1,x3) != 0 and Omega(x2,x3) != 0, forms the exponents
// a = (w_L x3)^2, b = (v_L x3)^2 and verifies every witness identity exactly,
// throwing Error on any violation. search_depth bounds the BFS for gamma'.
WitnessReport build_proof_witness(const Certificate& c, int search_depth = 8);
WitnessReport build_proof_witness(const GeneratorSet& gens, const Word& gamma,
                                  int search_depth = 8);

}  // namespace hgp
