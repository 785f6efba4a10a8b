#include "hgp/numeric.hpp"

#include <cctype>

namespace hgp {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(token)) throw Error("malformed rational '" + token + "'");
        return make_rat(Int(token), 1);
    }
    const std::string num = token.substr(0, slash);
    const std::string den = token.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-')
        throw Error("malformed rational '" + token + "'");
    Int d(den);
    if (d == 0) throw Error("zero denominator in '" + token + "'");
    return make_rat(Int(num), d);
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string int_str(const Int& v) { return v.get_str(); }

}  // namespace hgp
