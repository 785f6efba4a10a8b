#include "hgp/matrix.hpp"

#include <sstream>
#include <utility>

namespace hgp {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw Error("matrix product dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error("matrix sum dimension mismatch");
    IntMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] + b.a[i];
    return c;
}

IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error("matrix difference dimension mismatch");
    IntMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] - b.a[i];
    return c;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

IntMatrix outer(const IntVec& col, const IntVec& row) {
    IntMatrix m(static_cast<int>(col.size()), static_cast<int>(row.size()));
    for (std::size_t i = 0; i < col.size(); ++i)
        for (std::size_t j = 0; j < row.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = col[i] * row[j];
    return m;
}

IntVec mat_vec(const IntMatrix& m, const IntVec& v) {
    if (m.cols != static_cast<int>(v.size())) throw Error("matrix-vector dimension mismatch");
    IntVec r(static_cast<std::size_t>(m.rows), Int(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

IntVec vec_mat(const IntVec& v, const IntMatrix& m) {
    if (m.rows != static_cast<int>(v.size())) throw Error("vector-matrix dimension mismatch");
    IntVec r(static_cast<std::size_t>(m.cols), Int(0));
    for (int i = 0; i < m.rows; ++i) {
        const Int& vi = v[static_cast<std::size_t>(i)];
        if (vi == 0) continue;
        for (int j = 0; j < m.cols; ++j) r[static_cast<std::size_t>(j)] += vi * m.at(i, j);
    }
    return r;
}

Int dot(const IntVec& u, const IntVec& v) {
    if (u.size() != v.size()) throw Error("dot product dimension mismatch");
    Int s(0);
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    const int n = m.rows;
    if (n == 0) return Int(1);
    IntMatrix w = m;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return Int(0);
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = exact_div(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot
// row. Pivoting takes the first nonzero entry in column order.
std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(p, j));
        const Rat inv = Rat(1) / m.at(row, col);
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rat f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

int rank(const RatMatrix& m) {
    RatMatrix w = m;
    return static_cast<int>(rref(w).size());
}

int rank(const IntMatrix& m) { return rank(to_rat(m)); }

std::vector<IntVec> rational_nullspace(const RatMatrix& m) {
    RatMatrix w = m;
    const std::vector<int> pivot_cols = rref(w);

    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<IntVec> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rat> x(static_cast<std::size_t>(m.cols), Rat(0));
        x[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            x[static_cast<std::size_t>(pivot_cols[r])] = -w.at(static_cast<int>(r), free);

        // Clear denominators and normalize to a primitive integer vector.
        Int l(1);
        for (const Rat& q : x) l = int_lcm(l, q.get_den());
        IntVec iv(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            Rat scaled = x[i] * Rat(l);
            iv[i] = scaled.get_num();
        }
        basis.push_back(primitive_normalize(std::move(iv)));
    }
    return basis;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.is_square()) throw Error("inverse of a non-square matrix");
    const Int d = det(m);
    if (d != 1 && d != -1) throw Error("matrix is not unimodular (det = " + d.get_str() + ")");

    const int n = m.rows;
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = Rat(m.at(i, j));
        aug.at(i, n + i) = 1;
    }
    rref(aug);
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& q = aug.at(i, n + j);
            if (q.get_den() != 1) throw Error("unimodular inverse is not integral");
            inv.at(i, j) = q.get_num();
        }
    return inv;
}

IntVec primitive_normalize(IntVec v) {
    Int g(0);
    for (const Int& x : v) g = int_gcd(g, x);
    if (g == 0) throw Error("cannot normalize the zero vector");
    int lead = 0;
    for (const Int& x : v) {
        if (x != 0) {
            lead = sign_of(x);
            break;
        }
    }
    if (lead < 0) g = -g;
    for (Int& x : v) x = exact_div(x, g);
    return v;
}

bool independent_pair(const IntVec& u, const IntVec& v) {
    if (u.size() != v.size()) throw Error("independence test dimension mismatch");
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] - u[j] * v[i] != 0) return true;
    return false;
}

std::string matrix_str(const IntMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (j) os << " ";
            os << m.at(i, j).get_str();
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace hgp
