#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgp/numeric.hpp"

namespace hgp {

// Generator letters in the fixed order used throughout (also the orbit-search
// expansion order).
enum class Gen : std::uint8_t { A = 0, Ainv = 1, B = 2, Binv = 3 };

inline Gen inverse(Gen g) {
    switch (g) {
        case Gen::A: return Gen::Ainv;
        case Gen::Ainv: return Gen::A;
        case Gen::B: return Gen::Binv;
        case Gen::Binv: return Gen::B;
    }
    throw Error("bad generator");
}

// A group word, stored as written (source) and as the fully expanded letter
// sequence. No free reduction is performed.
struct Word {
    std::string source;
    std::vector<Gen> letters;

    std::size_t length() const { return letters.size(); }
    bool operator==(const Word& o) const { return letters == o.letters; }
};

// Grammar:  word := item* ; item := atom power? ;
//           atom := 'A' | 'B' | '(' word ')' ;
//           power := '^' ('-'? digits | '{' '-'? digits '}')
// Whitespace is ignored; exponent 0 contributes nothing; the empty word is
// the identity. Negative powers expand to repeated inverse letters.
Word parse_word(const std::string& text);

// Run-length serialization: maximal runs of one letter become powers, e.g.
// [A,A,Binv,Binv,Binv] -> "A^2B^{-3}". Reparses to the same letter sequence.
std::string word_str(const std::vector<Gen>& letters);
inline std::string word_str(const Word& w) { return word_str(w.letters); }

}  // namespace hgp
