#pragma once

#include <string>
#include <vector>

#include "hgp/numeric.hpp"

namespace hgp {

// Dense integer polynomial, coefficients lowest degree first.
// The zero polynomial has an empty coefficient list; otherwise the leading
// coefficient is nonzero.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    const Int& coeff(int k) const;

    bool operator==(const IntPoly&) const = default;
};

IntPoly poly_one();
IntPoly poly_xn_minus_one(unsigned n);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, unsigned e);

// Exact division by a monic divisor; throws Error if the remainder is nonzero.
IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den);

std::string poly_str(const IntPoly& p, const std::string& var = "x");

unsigned totient(unsigned d);

// d-th cyclotomic polynomial, computed exactly by iterated division of x^d-1
// by the cyclotomic polynomials of the proper divisors of d. Throws on d = 0.
IntPoly cyclotomic_poly(unsigned d);

}  // namespace hgp
