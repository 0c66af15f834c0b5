#include "swg/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace swg {

namespace {

void check_bounds(const std::vector<Symbol>& symbols, int k, int l) {
    for (Symbol s : symbols) {
        int bound = s.starred() ? l : k;
        if (s.value() > bound)
            throw std::invalid_argument("symbol " + to_string(s) + " outside alphabet bounds (" +
                                        std::to_string(k) + "," + std::to_string(l) + ")");
    }
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, int k, int l) : symbols_(std::move(symbols)), k_(k), l_(l) {
    if (k < 0 || l < 0) throw std::invalid_argument("negative alphabet bound");
    check_bounds(symbols_, k_, l_);
}

Word Word::of_rows(std::initializer_list<int> letters, int k) {
    return of_rows(std::vector<int>(letters), k);
}

Word Word::of_rows(const std::vector<int>& letters, int k) {
    std::vector<Symbol> syms;
    syms.reserve(letters.size());
    for (int v : letters) syms.push_back(Symbol::row(v));
    return Word(std::move(syms), k, 0);
}

Word Word::prefix(std::size_t n) const {
    if (n > size()) throw std::out_of_range("prefix length exceeds word length");
    return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + n), k_, l_);
}

Word Word::suffix(std::size_t m) const {
    if (m > size()) throw std::out_of_range("suffix length exceeds word length");
    return Word(std::vector<Symbol>(symbols_.end() - m, symbols_.end()), k_, l_);
}

bool Word::operator==(const Word& o) const { return symbols_ == o.symbols_; }

bool Word::operator<(const Word& o) const {
    return std::lexicographical_compare(symbols_.begin(), symbols_.end(), o.symbols_.begin(),
                                        o.symbols_.end());
}

Word reversed(const Word& w) {
    std::vector<Symbol> syms(w.symbols().rbegin(), w.symbols().rend());
    return Word(std::move(syms), w.k(), w.l());
}

Word dagger(const Word& w) {
    std::vector<Symbol> syms;
    syms.reserve(w.size());
    for (Symbol s : w.symbols())
        syms.push_back(s.starred() ? Symbol::row(s.value()) : Symbol::column(s.value()));
    return Word(std::move(syms), w.l(), w.k());
}

std::string to_string(const Word& w) {
    if (w.empty()) return "∅";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += to_string(w.at(i));
    }
    return out;
}

Word parse_word(std::string_view text, int k, int l) {
    if (text.empty() || text == "∅") return Word({}, k, l);
    std::vector<Symbol> syms;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        syms.push_back(parse_symbol(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Word(std::move(syms), k, l);
}

std::vector<Word> all_words(int k, int l, std::size_t n, std::size_t guard) {
    std::vector<Symbol> alphabet;
    for (int v = 1; v <= k; ++v) alphabet.push_back(Symbol::row(v));
    for (int v = l; v >= 1; --v) alphabet.push_back(Symbol::column(v));
    if (alphabet.empty() && n > 0) throw std::invalid_argument("empty alphabet");

    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(alphabet.size());
    if (total > static_cast<double>(guard))
        throw std::length_error("word enumeration guard exceeded");

    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<Symbol> syms(n);
        for (std::size_t i = 0; i < n; ++i) syms[i] = alphabet[idx[i]];
        out.emplace_back(std::move(syms), k, l);
        std::size_t pos = n;
        while (pos > 0) {
            if (++idx[pos - 1] < alphabet.size()) break;
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

}  // namespace swg
