#pragma once

#include <string>
#include <vector>

#include "hgp/numeric.hpp"
#include "hgp/polynomial.hpp"

namespace hgp {

// A multiset of rationals in [0,1), one factor of the hypergeometric data.
// Entries are kept in the order given; equality is multiset equality.
struct ParamTuple {
    std::vector<Rat> entries;

    std::size_t size() const { return entries.size(); }
    std::vector<Rat> sorted() const;
    bool same_multiset(const ParamTuple& other) const;
};

// Parses "p1/q1,p2/q2,..." (whitespace ignored, "0" allowed for "0/1").
// Entries must lie in [0,1) after reduction. Arity is not checked here.
ParamTuple parse_rational_tuple(const std::string& text);

std::string tuple_str(const ParamTuple& t);

// True iff the two multisets are disjoint as subsets of Q/Z, i.e. no entry of
// a differs from an entry of b by an integer. With entries in [0,1) this is
// plain set disjointness.
bool check_parameter_condition(const ParamTuple& a, const ParamTuple& b);

// prod_j (x - e^{2 pi i t_j}) as an integer polynomial. Requires the multiset
// to be Galois-stable: grouped by reduced denominator d, every residue class
// coprime to d must appear with one common multiplicity, so the product is a
// product of cyclotomic polynomials. Throws Error naming the offending
// denominator otherwise.
IntPoly build_char_poly(const ParamTuple& t);

}  // namespace hgp
