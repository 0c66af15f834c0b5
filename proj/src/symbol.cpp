#include "swg/symbol.hpp"

#include <charconv>
#include <stdexcept>

namespace swg {

Symbol Symbol::row(int value) {
    if (value < 1 || value >= kStarThreshold)
        throw std::invalid_argument("row symbol value out of range: " + std::to_string(value));
    return Symbol(value);
}

Symbol Symbol::column(int value) {
    if (value < 1 || value >= kStarThreshold)
        throw std::invalid_argument("column symbol value out of range: " + std::to_string(value));
    return Symbol(kStarBase - value);
}

Symbol Symbol::from_code(int code) {
    if (code < 1 || code >= kStarBase)
        throw std::invalid_argument("symbol code out of range");
    return Symbol(code);
}

std::string to_string(Symbol s) {
    std::string out = std::to_string(s.value());
    if (s.starred()) out += '*';
    return out;
}

Symbol parse_symbol(std::string_view text) {
    bool starred = !text.empty() && text.back() == '*';
    if (starred) text.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("bad symbol: " + std::string(text) + (starred ? "*" : ""));
    return starred ? Symbol::column(value) : Symbol::row(value);
}

}  // namespace swg
