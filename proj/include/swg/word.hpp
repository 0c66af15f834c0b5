#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "swg/symbol.hpp"

namespace swg {

// A finite word over the mixed alphabet A_k ∪ A*_l, carrying its declared
// alphabet bounds. Every symbol is validated against the bounds.
class Word {
public:
    Word() = default;
    Word(std::vector<Symbol> symbols, int k, int l);

    // Pure word over {1..k} from integer letters.
    static Word of_rows(std::initializer_list<int> letters, int k);
    static Word of_rows(const std::vector<int>& letters, int k);

    int k() const { return k_; }
    int l() const { return l_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol at(std::size_t i) const { return symbols_.at(i); }  // 0-based
    const std::vector<Symbol>& symbols() const { return symbols_; }

    Word prefix(std::size_t n) const;  // [x]_n
    Word suffix(std::size_t m) const;  // [w]^m, final segment

    bool operator==(const Word&) const;   // compares symbols only
    bool operator<(const Word& o) const;  // lexicographic in the alphabet order

private:
    std::vector<Symbol> symbols_;
    int k_ = 0;
    int l_ = 0;
};

Word reversed(const Word& w);

// Replaces i by i* and j* by j; alphabet bounds swap (k,l) -> (l,k).
Word dagger(const Word& w);

// Comma-separated symbols, star suffix for column symbols; empty word = "∅".
std::string to_string(const Word& w);
Word parse_word(std::string_view text, int k, int l);

// All words of length n over A_k ∪ A*_l in lexicographic order.
// Guard: (k+l)^n must not exceed `guard`.
std::vector<Word> all_words(int k, int l, std::size_t n, std::size_t guard = 10'000'000);

}  // namespace swg
