#include "hgp/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace hgp {

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int& IntPoly::coeff(int k) const {
    static const Int zero(0);
    if (k < 0 || k >= static_cast<int>(c.size())) return zero;
    return c[static_cast<std::size_t>(k)];
}

IntPoly poly_one() { return IntPoly({Int(1)}); }

IntPoly poly_xn_minus_one(unsigned n) {
    std::vector<Int> c(n + 1, Int(0));
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(c));
}

IntPoly poly_pow(const IntPoly& a, unsigned e) {
    IntPoly r = poly_one();
    for (unsigned i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw Error("polynomial division by zero");
    if (!den.is_monic()) throw Error("exact division requires a monic divisor");
    if (num.is_zero()) return IntPoly();
    if (num.degree() < den.degree()) throw Error("inexact polynomial division");

    std::vector<Int> rem = num.c;
    const int dq = num.degree() - den.degree();
    std::vector<Int> quot(static_cast<std::size_t>(dq) + 1, Int(0));
    for (int k = dq; k >= 0; --k) {
        Int lead = rem[static_cast<std::size_t>(k + den.degree())];
        quot[static_cast<std::size_t>(k)] = lead;
        if (lead == 0) continue;
        for (int j = 0; j <= den.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= lead * den.c[static_cast<std::size_t>(j)];
    }
    for (const Int& r : rem)
        if (r != 0) throw Error("inexact polynomial division");
    return IntPoly(std::move(quot));
}

std::string poly_str(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Int& a = p.coeff(k);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        Int mag = abs(a);
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

unsigned totient(unsigned d) {
    unsigned result = d;
    unsigned m = d;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPoly cyclotomic_poly(unsigned d) {
    if (d == 0) throw Error("cyclotomic polynomial undefined for d = 0");

    static std::map<unsigned, IntPoly> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }

    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
    IntPoly phi = poly_xn_minus_one(d);
    for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) phi = poly_div_exact(phi, cyclotomic_poly(e));

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(d, phi);
    return phi;
}

}  // namespace hgp
