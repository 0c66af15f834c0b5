#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "swg/diagram.hpp"
#include "swg/symbol.hpp"

namespace swg {

enum class TableauKind {
    standard,
    semistandard,
    dual_semistandard,   // transpose of a semistandard tableau
    hook_semistandard,   // (k,l)-semistandard over the mixed alphabet
};

std::string to_string(TableauKind k);

// A filling of a Young diagram, stored row-major as ragged rows. Values are
// immutable after construction; insertion procedures return new tableaux.
class Tableau {
public:
    Tableau() = default;  // empty tableau, the level-0 vertex
    explicit Tableau(std::vector<std::vector<Symbol>> rows);

    const std::vector<std::vector<Symbol>>& row_data() const { return rows_; }
    YoungDiagram shape() const;
    std::size_t size() const { return size_; }
    bool empty() const { return rows_.empty(); }

    Symbol at(CellPosition c) const;  // 1-based
    Symbol at(int row, int col) const { return at({row, col}); }

    // Number of occurrences of each symbol, keyed by symbol.
    std::map<Symbol, long long> content() const;

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator<(const Tableau& o) const;  // row-major lexicographic

private:
    std::vector<std::vector<Symbol>> rows_;
    std::size_t size_ = 0;
};

// Kind checks. `k`/`l` bound the symbol values where relevant.
bool is_standard(const Tableau& t);
bool is_semistandard(const Tableau& t, int k);
bool is_dual_semistandard(const Tableau& t, int k);
bool is_hook_semistandard(const Tableau& t, int k, int l);
bool is_valid(const Tableau& t, TableauKind kind, int k, int l);

// Canonical text form: rows separated by "/", entries comma-separated,
// starred entries suffixed "*" (e.g. "1,2*/2"); empty tableau = "∅".
std::string to_string(const Tableau& t);
Tableau parse_tableau(std::string_view text);

}  // namespace swg
