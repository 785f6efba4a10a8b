#include "hgp/certify.hpp"

namespace hgp {

VerificationReport verify_pair(const GeneratorSet& gens, const Word& gamma) {
    VerificationReport rep;

    Transvection t;
    try {
        t = group_transvection(gens);
    } catch (const Error& e) {
        rep.reason = e.what();
        return rep;
    }
    rep.transvection_ok = true;

    const IntMatrix m = eval_word(gamma, gens);
    const IntVec w = mat_vec(m, t.v_R);
    rep.orthogonality_value = dot(t.v_L, w);
    rep.independent = independent_pair(t.v_R, w);

    FormSolution sol = solve_form_space(gens[Gen::A], gens[Gen::B]);
    rep.form_dimension = sol.dimension;
    if (sol.form) {
        if (det(sol.form->omega) == 0) {
            rep.reason = "invariant form is degenerate";
            return rep;
        }
        rep.lambda = transvection_lambda(t, *sol.form);
    }

    if (rep.orthogonality_value != 0)
        rep.reason = "v_L gamma v_R != 0";
    else if (!rep.independent)
        rep.reason = "v_R and gamma v_R are linearly dependent";
    else if (rep.form_dimension != 1)
        rep.reason = "invariant form space has dimension " + std::to_string(rep.form_dimension);
    else
        rep.pass = true;
    return rep;
}

VerificationReport verify_pair(const IntMatrix& A, const IntMatrix& B, const Word& gamma) {
    return verify_pair(GeneratorSet::from_pair(A, B), gamma);
}

VerificationReport check_certificate(const Certificate& c) {
    const GroupPresentation gp = build_group(c.alpha, c.beta);
    return verify_pair(gp.generators(), c.gamma);
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error("witness invariant violated: " + what);
}

}  // namespace

WitnessReport build_proof_witness(const GeneratorSet& gens, const Word& gamma,
                                  int search_depth) {
    const VerificationReport rep = verify_pair(gens, gamma);
    if (!rep.pass) throw Error("certificate does not pass: " + rep.reason);

    const Transvection t = group_transvection(gens);
    const IntMatrix m = eval_word(gamma, gens);
    const IntMatrix m_inv = unimodular_inverse(m);

    WitnessReport wit;
    wit.x1 = t.v_R;
    wit.x2 = mat_vec(m, t.v_R);
    const IntVec w_L = vec_mat(t.v_L, m_inv);  // X_2 = 1 + x2 w_L

    // x3 = gamma' x1, non-orthogonal to both x1 and x2. The proof gets such a
    // gamma' from Zariski density; a short BFS finds one concretely.
    SearchConfig cfg;
    cfg.max_depth = search_depth;
    const auto accept = [&](const IntVec& v) {
        return dot(t.v_L, v) != 0 && dot(w_L, v) != 0;
    };
    BfsOutcome bfs = orbit_bfs(gens, t.v_R, cfg, accept);
    if (!bfs.found)
        throw Error("no witness direction x3 within depth " + std::to_string(search_depth));
    wit.gamma_prime = reconstruct_word(bfs.nodes, bfs.node_index);
    wit.x3 = bfs.nodes[static_cast<std::size_t>(bfs.node_index)].vec;

    const Int p = dot(t.v_L, wit.x3);  // lambda * Omega(x1, x3)
    const Int q = dot(w_L, wit.x3);    // lambda * Omega(x2, x3)
    wit.a = q * q;
    wit.b = p * p;

    // X_1^a = 1 + a v_R v_L and X_2^{-b} = 1 - b x2 w_L (rank-one unipotents).
    const int dim = gens.dim();
    IntMatrix x1_pow = IntMatrix::identity(dim);
    IntMatrix x2_pow = IntMatrix::identity(dim);
    {
        const IntMatrix vrvl = outer(t.v_R, t.v_L);
        const IntMatrix x2wl = outer(wit.x2, w_L);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                x1_pow.at(i, j) += wit.a * vrvl.at(i, j);
                x2_pow.at(i, j) -= wit.b * x2wl.at(i, j);
            }
    }
    wit.R = mat_mul(x1_pow, x2_pow);

    // Exact verification of the proof's identities.
    require(mat_vec(wit.R, wit.x1) == wit.x1, "R x1 != x1");
    require(mat_vec(wit.R, wit.x2) == wit.x2, "R x2 != x2");

    const SymplecticForm form = solve_invariant_form(gens[Gen::A], gens[Gen::B]);
    const Int c1 = pairing(form, wit.x2, wit.x3);
    const Int c2 = pairing(form, wit.x1, wit.x3);
    require(c1 != 0 && c2 != 0, "x3 is Omega-orthogonal to x1 or x2");
    wit.direction.resize(wit.x1.size());
    for (std::size_t i = 0; i < wit.x1.size(); ++i)
        wit.direction[i] = c1 * wit.x1[i] - c2 * wit.x2[i];

    // R x3 - x3 = p q (q x1 - p x2), and q x1 - p x2 = lambda * direction.
    const IntVec rx3 = mat_vec(wit.R, wit.x3);
    const Rat lambda = transvection_lambda(t, form);
    const Int& lam_num = lambda.get_num();
    const Int& lam_den = lambda.get_den();
    for (std::size_t i = 0; i < wit.x1.size(); ++i) {
        const Int shift = q * wit.x1[i] - p * wit.x2[i];
        require(rx3[i] - wit.x3[i] == p * q * shift, "R x3 - x3 != p q (q x1 - p x2)");
        require(lam_den * shift == lam_num * wit.direction[i],
                "R-shift direction is not proportional to Omega(x2,x3) x1 - Omega(x1,x3) x2");
    }

    require(pairing(form, wit.direction, wit.x1) == 0, "direction not Omega-orthogonal to x1");
    require(pairing(form, wit.direction, wit.x2) == 0, "direction not Omega-orthogonal to x2");
    require(pairing(form, wit.direction, wit.x3) == 0, "direction not Omega-orthogonal to x3");

    // x1, x2, x3 must span a 3-dimensional W (Omega restricted to it is
    // non-trivial since Omega(x1,x3) != 0).
    IntMatrix span(dim, 3);
    for (int i = 0; i < dim; ++i) {
        span.at(i, 0) = wit.x1[static_cast<std::size_t>(i)];
        span.at(i, 1) = wit.x2[static_cast<std::size_t>(i)];
        span.at(i, 2) = wit.x3[static_cast<std::size_t>(i)];
    }
    require(rank(span) == 3, "x1, x2, x3 do not span a 3-dimensional subspace");

    return wit;
}

WitnessReport build_proof_witness(const Certificate& c, int search_depth) {
    const GroupPresentation gp = build_group(c.alpha, c.beta);
    return build_proof_witness(gp.generators(), c.gamma, search_depth);
}

}  // namespace hgp
