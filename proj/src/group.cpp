#include "hgp/group.hpp"

#include <map>

namespace hgp {

GeneratorSet GeneratorSet::from_pair(const IntMatrix& A, const IntMatrix& B) {
    return GeneratorSet{{A, unimodular_inverse(A), B, unimodular_inverse(B)}};
}

IntMatrix companion_matrix(const IntPoly& p) {
    if (!p.is_monic()) throw Error("companion matrix requires a monic polynomial");
    const int d = p.degree();
    if (d < 2) throw Error("companion matrix requires degree >= 2");
    IntMatrix c(d, d);
    for (int i = 0; i + 1 < d; ++i) c.at(i + 1, i) = 1;
    for (int i = 0; i < d; ++i) c.at(i, d - 1) = -p.coeff(i);
    return c;
}

GroupPresentation build_group(const ParamTuple& alpha, const ParamTuple& beta) {
    if (alpha.size() != beta.size())
        throw Error("parameter tuples have different lengths (" + std::to_string(alpha.size()) +
                    " vs " + std::to_string(beta.size()) + ")");
    if (alpha.size() % 2 != 0 || alpha.size() < 4)
        throw Error("parameter tuples must have even length 2n with n >= 2");
    if (!check_parameter_condition(alpha, beta))
        throw Error("parameter condition violated: alpha and beta share an entry mod 1");

    GroupPresentation gp;
    gp.n = static_cast<int>(alpha.size()) / 2;
    gp.alpha = alpha;
    gp.beta = beta;
    gp.f = build_char_poly(alpha);
    gp.g = build_char_poly(beta);
    gp.A = companion_matrix(gp.f);
    gp.B = companion_matrix(gp.g);
    gp.Ainv = unimodular_inverse(gp.A);
    gp.Binv = unimodular_inverse(gp.B);
    return gp;
}

IntMatrix eval_word(const Word& w, const GeneratorSet& gens) {
    const int dim = gens.dim();
    IntMatrix result = IntMatrix::identity(dim);

    // Powers of each generator, grown on demand: pow[g][k] = g^(k+1).
    std::map<Gen, std::vector<IntMatrix>> pow;

    std::size_t i = 0;
    while (i < w.letters.size()) {
        const Gen g = w.letters[i];
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == g) ++j;
        const std::size_t run = j - i;

        auto& powers = pow[g];
        if (powers.empty()) powers.push_back(gens[g]);
        while (powers.size() < run) powers.push_back(mat_mul(powers.back(), gens[g]));
        result = mat_mul(result, powers[run - 1]);
        i = j;
    }
    return result;
}

IntMatrix eval_word(const Word& w, const GroupPresentation& gp) {
    return eval_word(w, gp.generators());
}

Transvection transvection_factor(const IntMatrix& X) {
    if (!X.is_square()) throw Error("transvection factor requires a square matrix");
    const int n = X.rows;
    IntMatrix d = mat_sub(X, IntMatrix::identity(n));

    int col0 = -1;
    for (int j = 0; j < n && col0 < 0; ++j)
        for (int i = 0; i < n; ++i)
            if (d.at(i, j) != 0) {
                col0 = j;
                break;
            }
    if (col0 < 0) throw Error("not a transvection: X - 1 has rank 0");

    IntVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = d.at(i, col0);
    IntVec v_R = primitive_normalize(std::move(v));

    int pivot = 0;
    while (v_R[static_cast<std::size_t>(pivot)] == 0) ++pivot;

    // Every column must be an integer multiple of v_R; the multiples form v_L.
    IntVec v_L(static_cast<std::size_t>(n), Int(0));
    for (int j = 0; j < n; ++j) {
        const Int& top = d.at(pivot, j);
        if (!divides(v_R[static_cast<std::size_t>(pivot)], top))
            throw Error("not a transvection: X - 1 has rank > 1");
        const Int s = exact_div(top, v_R[static_cast<std::size_t>(pivot)]);
        for (int i = 0; i < n; ++i)
            if (d.at(i, j) != s * v_R[static_cast<std::size_t>(i)])
                throw Error("not a transvection: X - 1 has rank > 1");
        v_L[static_cast<std::size_t>(j)] = s;
    }

    Transvection t;
    t.X = X;
    t.v_R = std::move(v_R);
    t.v_L = std::move(v_L);
    return t;
}

Transvection group_transvection(const GeneratorSet& gens) {
    return transvection_factor(mat_mul(gens[Gen::Ainv], gens[Gen::B]));
}

}  // namespace hgp
