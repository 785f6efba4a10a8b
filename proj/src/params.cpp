#include "hgp/params.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hgp {

std::vector<Rat> ParamTuple::sorted() const {
    std::vector<Rat> s = entries;
    std::sort(s.begin(), s.end());
    return s;
}

bool ParamTuple::same_multiset(const ParamTuple& other) const {
    return sorted() == other.sorted();
}

ParamTuple parse_rational_tuple(const std::string& text) {
    std::string compact;
    compact.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.empty()) throw Error("empty parameter tuple");

    ParamTuple t;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = compact.find(',', start);
        const std::string token =
            compact.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty()) throw Error("empty entry in parameter tuple");
        Rat q = parse_rat(token);
        if (q < 0 || q >= 1) throw Error("parameter entry " + rat_str(q) + " outside [0,1)");
        t.entries.push_back(q);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return t;
}

std::string tuple_str(const ParamTuple& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (i) os << ",";
        os << rat_str(t.entries[i]);
    }
    return os.str();
}

bool check_parameter_condition(const ParamTuple& a, const ParamTuple& b) {
    std::set<Rat> seen(a.entries.begin(), a.entries.end());
    for (const Rat& q : b.entries)
        if (seen.count(q)) return false;
    return true;
}

IntPoly build_char_poly(const ParamTuple& t) {
    if (t.entries.empty()) throw Error("empty parameter tuple");

    // Group reduced entries by denominator; count residues.
    std::map<unsigned long, std::map<unsigned long, unsigned>> by_den;
    for (const Rat& q : t.entries) {
        const Int& den = q.get_den();
        const Int& num = q.get_num();
        if (!den.fits_ulong_p()) throw Error("parameter denominator too large: " + rat_str(q));
        by_den[den.get_ui()][num.get_ui()] += 1;
    }

    IntPoly poly = poly_one();
    for (const auto& [d, residues] : by_den) {
        const unsigned long dl = d;
        // Every residue coprime to d must be present with one common multiplicity.
        const unsigned mult = residues.begin()->second;
        unsigned long expect = (dl == 1) ? 1 : 0;
        if (dl > 1)
            for (unsigned long r = 1; r < dl; ++r)
                if (std::gcd(r, dl) == 1) ++expect;
        if (residues.size() != expect)
            throw Error("tuple is not Galois-stable: denominator " + std::to_string(dl) +
                        " does not cover all coprime residues");
        for (const auto& [r, m] : residues) {
            (void)r;
            if (m != mult)
                throw Error("tuple is not Galois-stable: denominator " + std::to_string(dl) +
                            " has unequal residue multiplicities");
        }
        poly = poly_mul(poly, poly_pow(cyclotomic_poly(static_cast<unsigned>(dl)), mult));
    }
    return poly;
}

}  // namespace hgp
