#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hgp {

// Arbitrary-precision integers and rationals. Rat values are kept canonical
// (reduced, positive denominator) by construction.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// Input and validation failures. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline int sign_of(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; caller guarantees divisibility.
inline Int exact_div(const Int& a, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

Rat make_rat(const Int& num, const Int& den);

// Parses "p/q" or "p" (q > 0). Throws Error on anything else.
Rat parse_rat(const std::string& token);

// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& q);

std::string int_str(const Int& v);

}  // namespace hgp
