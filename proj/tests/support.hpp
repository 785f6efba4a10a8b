#pragma once

// Test-side oracles, deliberately independent of the library code paths they
// check, plus deterministic random generators.

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hgp/group.hpp"
#include "hgp/polynomial.hpp"

namespace testsupport {

using hgp::Int;
using hgp::IntMatrix;
using hgp::IntVec;

inline IntMatrix mat_from(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

inline IntVec vec_from(const std::vector<long>& v) {
    IntVec r;
    for (long x : v) r.emplace_back(x);
    return r;
}

// Naive product with the transposed access pattern.
inline IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j)
        for (int i = 0; i < a.rows; ++i) {
            Int s(0);
            for (int k = 0; k < a.cols; ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

// Recursive cofactor expansion along the first row.
inline Int naive_det(const IntMatrix& m) {
    const int n = m.rows;
    if (n == 1) return m.at(0, 0);
    Int s(0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        const Int term = m.at(0, j) * naive_det(minor);
        s += (j % 2 == 0) ? term : -term;
    }
    return s;
}

// --- integer polynomial oracle (long long coefficients, lowest first) ---

using LPoly = std::vector<long long>;

inline LPoly lpoly_trim(LPoly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

inline LPoly lpoly_add(const LPoly& a, const LPoly& b) {
    LPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

inline LPoly lpoly_mul(const LPoly& a, const LPoly& b) {
    LPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Long division by a monic divisor; returns {quotient, remainder}.
inline std::pair<LPoly, LPoly> lpoly_divmod(LPoly num, const LPoly& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (dn < dd) return {LPoly{0}, lpoly_trim(std::move(num))};
    LPoly quot(static_cast<std::size_t>(dn - dd) + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
        const long long lead = num[static_cast<std::size_t>(k + dd)];
        quot[static_cast<std::size_t>(k)] = lead;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<std::size_t>(k + j)] -= lead * den[static_cast<std::size_t>(j)];
    }
    return {quot, lpoly_trim(std::move(num))};
}

namespace detail {

using PMat = std::vector<std::vector<LPoly>>;

inline LPoly pmat_det(const PMat& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    LPoly s{0};
    for (std::size_t j = 0; j < n; ++j) {
        PMat minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LPoly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        LPoly term = lpoly_mul(m[0][j], pmat_det(minor));
        if (j % 2 == 1)
            for (long long& x : term) x = -x;
        s = lpoly_add(s, term);
    }
    return s;
}

}  // namespace detail

// Characteristic polynomial det(xI - M) by cofactor expansion over
// polynomial-valued entries.
inline LPoly naive_charpoly(const IntMatrix& m) {
    detail::PMat p(static_cast<std::size_t>(m.rows),
                   std::vector<LPoly>(static_cast<std::size_t>(m.cols)));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            LPoly e{-m.at(i, j).get_si()};
            if (i == j) e.push_back(1);  // x - m_ii on the diagonal
            p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        }
    return lpoly_trim(detail::pmat_det(p));
}

inline bool poly_equals(const hgp::IntPoly& p, const LPoly& q) {
    if (p.c.size() != q.size()) return false;
    for (std::size_t i = 0; i < q.size(); ++i)
        if (p.c[i] != Int(static_cast<long>(q[i]))) return false;
    return true;
}

// --- random generators (fixed seeds; tests must be reproducible) ---

inline IntMatrix random_matrix(std::mt19937& rng, int n, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    return m;
}

// Product of elementary shears (det = 1) with small entries.
inline IntMatrix random_unimodular(std::mt19937& rng, int n, int ops = 12) {
    std::uniform_int_distribution<int> row(0, n - 1);
    std::uniform_int_distribution<int> coef(0, 1);
    IntMatrix u = IntMatrix::identity(n);
    for (int k = 0; k < ops; ++k) {
        const int i = row(rng);
        int j = row(rng);
        while (j == i) j = row(rng);
        const int c = coef(rng) == 0 ? -1 : 1;
        for (int col = 0; col < n; ++col) u.at(i, col) += c * u.at(j, col);
    }
    return u;
}

// Random grammar-valid word, built together with its value so parser and
// evaluator can be checked against the generating structure itself.
struct RandomWord {
    std::string text;
    IntMatrix value;
};

inline RandomWord random_grammar_word(std::mt19937& rng, const hgp::GeneratorSet& gens,
                                      int depth) {
    std::uniform_int_distribution<int> item_count(1, 3);
    std::uniform_int_distribution<int> atom_kind(0, depth > 0 ? 3 : 2);
    std::uniform_int_distribution<int> power_kind(0, 3);
    std::uniform_int_distribution<int> exp_dist(-6, 6);

    RandomWord w{std::string(), IntMatrix::identity(gens.dim())};
    const int items = item_count(rng);
    for (int it = 0; it < items; ++it) {
        std::string atom_text;
        IntMatrix atom_value;
        switch (atom_kind(rng)) {
            case 0:
            case 1:
                atom_text = "A";
                atom_value = gens[hgp::Gen::A];
                break;
            case 2:
                atom_text = "B";
                atom_value = gens[hgp::Gen::B];
                break;
            default: {
                RandomWord sub = random_grammar_word(rng, gens, depth - 1);
                atom_text = "(" + sub.text + ")";
                atom_value = sub.value;
                break;
            }
        }

        int exponent = 1;
        if (power_kind(rng) != 0) {
            exponent = exp_dist(rng);
            const bool braced = power_kind(rng) % 2 == 0 || exponent < 0;
            atom_text += "^";
            atom_text += braced ? "{" + std::to_string(exponent) + "}" : std::to_string(exponent);
        }

        IntMatrix base = atom_value;
        if (exponent < 0) base = hgp::unimodular_inverse(atom_value);
        for (int k = 0; k < std::abs(exponent); ++k) w.value = hgp::mat_mul(w.value, base);
        w.text += atom_text;
    }
    return w;
}

// All orbit vectors {w * root : |w| <= depth}, by brute-force enumeration of
// generator words.
inline std::set<IntVec> naive_orbit(const hgp::GeneratorSet& gens, const IntVec& root,
                                    int depth) {
    std::set<IntVec> out;
    out.insert(root);
    std::vector<IntVec> level{root};
    for (int d = 0; d < depth; ++d) {
        std::vector<IntVec> next;
        for (const IntVec& v : level)
            for (int g = 0; g < 4; ++g) {
                IntVec img = hgp::mat_vec(gens[static_cast<hgp::Gen>(g)], v);
                out.insert(img);
                next.push_back(std::move(img));
            }
        level = std::move(next);
    }
    return out;
}

}  // namespace testsupport
