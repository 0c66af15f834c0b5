#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace swg {

// A symbol of the two-part alphabet: row symbols 1..k and column (starred)
// symbols 1*..l*. The total order is
//
//     1 < 2 < ... < k < l* < ... < 2* < 1*
//
// realized by a single integer code so that comparisons never branch on
// starredness at call sites.
class Symbol {
public:
    Symbol() = default;

    static Symbol row(int value);     // unstarred symbol `value`
    static Symbol column(int value);  // starred symbol `value*`

    bool starred() const { return code_ > kStarThreshold; }
    int value() const { return starred() ? kStarBase - code_ : code_; }
    int code() const { return code_; }

    static Symbol from_code(int code);

    auto operator<=>(const Symbol& o) const { return code_ <=> o.code_; }
    bool operator==(const Symbol& o) const = default;

private:
    static constexpr int kStarBase = 1 << 24;
    static constexpr int kStarThreshold = 1 << 23;

    explicit Symbol(int code) : code_(code) {}

    int code_ = 0;
};

std::string to_string(Symbol s);

// Accepts "3" or "3*".
Symbol parse_symbol(std::string_view text);

}  // namespace swg
