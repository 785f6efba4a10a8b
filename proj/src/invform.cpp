#include "hgp/invform.hpp"

#include <vector>

namespace hgp {

namespace {

// Unknowns are omega_{ij} for i < j, in row-major order of (i,j).
int pair_index(int i, int j, int dim) {
    // Number of pairs (a,b), a<b, with a < i, plus offset within row i.
    return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

// Rows of the invariance system M^T Omega M - Omega = 0 restricted to the
// upper triangle (the lower triangle is its negative by antisymmetry).
void append_invariance_rows(const IntMatrix& M, std::vector<IntVec>& rows) {
    const int dim = M.rows;
    const int unknowns = dim * (dim - 1) / 2;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            IntVec row(static_cast<std::size_t>(unknowns), Int(0));
            for (int k = 0; k < dim; ++k)
                for (int l = k + 1; l < dim; ++l) {
                    // Coefficient of omega_{kl} in (M^T Omega M)_{ij}.
                    Int c = M.at(k, i) * M.at(l, j) - M.at(l, i) * M.at(k, j);
                    if (k == i && l == j) c -= 1;
                    row[static_cast<std::size_t>(pair_index(k, l, dim))] = std::move(c);
                }
            rows.push_back(std::move(row));
        }
}

}  // namespace

FormSolution solve_form_space(const IntMatrix& A, const IntMatrix& B) {
    if (!A.is_square() || !B.is_square() || A.rows != B.rows)
        throw Error("generators must be square matrices of equal size");
    const int dim = A.rows;
    const int unknowns = dim * (dim - 1) / 2;

    std::vector<IntVec> rows;
    append_invariance_rows(A, rows);
    append_invariance_rows(B, rows);

    RatMatrix system(static_cast<int>(rows.size()), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < unknowns; ++c)
            system.at(static_cast<int>(r), c) = Rat(rows[r][static_cast<std::size_t>(c)]);

    const std::vector<IntVec> basis = rational_nullspace(system);

    FormSolution sol;
    sol.dimension = static_cast<int>(basis.size());
    if (sol.dimension != 1) return sol;

    // The basis vector is already primitive with positive first nonzero
    // entry, which is exactly the sign/scale convention for Omega.
    IntMatrix omega(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            const Int& v = basis[0][static_cast<std::size_t>(pair_index(i, j, dim))];
            omega.at(i, j) = v;
            omega.at(j, i) = -v;
        }
    sol.form = SymplecticForm{std::move(omega)};
    return sol;
}

SymplecticForm solve_invariant_form(const IntMatrix& A, const IntMatrix& B) {
    FormSolution sol = solve_form_space(A, B);
    if (sol.dimension == 0)
        throw Error("no invariant antisymmetric form (parameters not symplectic-type)");
    if (sol.dimension >= 2)
        throw Error("invariant form space has dimension " + std::to_string(sol.dimension) +
                    " (reducible or degenerate setting)");
    if (det(sol.form->omega) == 0) throw Error("invariant form is degenerate (det = 0)");
    return *std::move(sol.form);
}

SymplecticForm solve_invariant_form(const GroupPresentation& gp) {
    return solve_invariant_form(gp.A, gp.B);
}

Int pairing(const SymplecticForm& form, const IntVec& x, const IntVec& y) {
    if (static_cast<int>(x.size()) != form.omega.rows ||
        static_cast<int>(y.size()) != form.omega.cols)
        throw Error("pairing dimension mismatch");
    return dot(x, mat_vec(form.omega, y));
}

Rat transvection_lambda(const Transvection& t, const SymplecticForm& form) {
    const IntVec w = vec_mat(t.v_R, form.omega);  // v_R^T Omega
    int pivot = -1;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    if (pivot < 0) throw Error("v_R^T Omega vanishes; lambda undefined");
    const Rat lambda = make_rat(t.v_L[static_cast<std::size_t>(pivot)],
                                w[static_cast<std::size_t>(pivot)]);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (Rat(t.v_L[i]) != lambda * Rat(w[i]))
            throw Error("v_L is not a rational multiple of v_R^T Omega");
    return lambda;
}

}  // namespace hgp
