#pragma once

#include <optional>

#include "hgp/group.hpp"
#include "hgp/matrix.hpp"

namespace hgp {

// Integral antisymmetric form preserved by both generators, normalized to
// primitive entries with positive first nonzero entry above the diagonal.
struct SymplecticForm {
    IntMatrix omega;
};

// Solution space of { M^T Omega M = Omega : M in {A,B} } within antisymmetric
// matrices. The form is filled in only when the space is 1-dimensional.
struct FormSolution {
    int dimension = 0;
    std::optional<SymplecticForm> form;
};

FormSolution solve_form_space(const IntMatrix& A, const IntMatrix& B);

// Requires a 1-dimensional solution space and a non-degenerate representative;
// throws Error otherwise (dimension 0: not symplectic-type; dimension >= 2:
// reducible/degenerate setting; det = 0: degenerate form).
SymplecticForm solve_invariant_form(const GroupPresentation& gp);
SymplecticForm solve_invariant_form(const IntMatrix& A, const IntMatrix& B);

// Omega(x, y) = x^T Omega y, exact.
Int pairing(const SymplecticForm& form, const IntVec& x, const IntVec& y);

// The scalar with v_L = lambda * (v_R^T Omega); throws Error if no single
// rational works (well-definedness is part of the contract).
Rat transvection_lambda(const Transvection& t, const SymplecticForm& form);

}  // namespace hgp
