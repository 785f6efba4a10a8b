#include "hgp/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hgp {

namespace {

constexpr long kMaxExponent = 1000000;
constexpr std::size_t kMaxLetters = 10000000;

class WordParser {
public:
    explicit WordParser(const std::string& text) {
        // Whitespace carries no meaning anywhere in the grammar.
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }

    std::vector<Gen> parse() {
        std::vector<Gen> letters = parse_word_body();
        if (pos_ != src_.size()) fail("unexpected ')'");
        return letters;
    }

private:
    std::string src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error("word syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    bool done() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    std::vector<Gen> parse_word_body() {
        std::vector<Gen> letters;
        while (!done() && peek() != ')') {
            std::vector<Gen> item = parse_atom();
            const long e = parse_power();
            append_power(letters, item, e);
        }
        return letters;
    }

    std::vector<Gen> parse_atom() {
        if (done()) fail("expected 'A', 'B' or '('");
        const char c = peek();
        if (c == 'A') {
            ++pos_;
            return {Gen::A};
        }
        if (c == 'B') {
            ++pos_;
            return {Gen::B};
        }
        if (c == '(') {
            ++pos_;
            std::vector<Gen> inner = parse_word_body();
            if (done() || peek() != ')') fail("unbalanced parentheses");
            ++pos_;
            return inner;
        }
        fail(std::string("unknown symbol '") + c + "'");
    }

    // Returns 1 when no power is present.
    long parse_power() {
        if (done() || peek() != '^') return 1;
        ++pos_;
        bool braced = false;
        if (!done() && peek() == '{') {
            braced = true;
            ++pos_;
        }
        bool negative = false;
        if (!done() && peek() == '-') {
            negative = true;
            ++pos_;
        }
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
        long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > kMaxExponent) fail("exponent too large");
            ++pos_;
        }
        if (braced) {
            if (done() || peek() != '}') fail("malformed exponent: missing '}'");
            ++pos_;
        }
        return negative ? -value : value;
    }

    void append_power(std::vector<Gen>& out, const std::vector<Gen>& item, long e) {
        std::vector<Gen> unit = item;
        if (e < 0) {
            std::reverse(unit.begin(), unit.end());
            for (Gen& g : unit) g = inverse(g);
            e = -e;
        }
        if (out.size() + unit.size() * static_cast<std::size_t>(e) > kMaxLetters)
            fail("expanded word too long");
        for (long k = 0; k < e; ++k) out.insert(out.end(), unit.begin(), unit.end());
    }
};

}  // namespace

Word parse_word(const std::string& text) {
    Word w;
    w.source = text;
    w.letters = WordParser(text).parse();
    return w;
}

std::string word_str(const std::vector<Gen>& letters) {
    std::ostringstream os;
    std::size_t i = 0;
    while (i < letters.size()) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        const std::size_t run = j - i;
        const bool inv = letters[i] == Gen::Ainv || letters[i] == Gen::Binv;
        os << ((letters[i] == Gen::A || letters[i] == Gen::Ainv) ? 'A' : 'B');
        if (inv)
            os << "^{-" << run << "}";
        else if (run > 1)
            os << "^" << run;
        i = j;
    }
    return os.str();
}

}  // namespace hgp
