#include "swg/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace swg {

namespace {

enum class Bump { strict, weak };

Bump bump_rule(Symbol s, InsertionVariant v) {
    switch (v) {
        case InsertionVariant::plain: return Bump::strict;
        case InsertionVariant::dual: return Bump::weak;
        case InsertionVariant::mixed: return s.starred() ? Bump::weak : Bump::strict;
        case InsertionVariant::mixed_star: return s.starred() ? Bump::strict : Bump::weak;
    }
    throw std::logic_error("bad variant");
}

}  // namespace

namespace detail {

CellPosition insert_inplace(std::vector<std::vector<Symbol>>& rows, Symbol s,
                            InsertionVariant v) {
    Symbol cur = s;
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) rows.emplace_back();
        auto& row = rows[r];
        auto it = bump_rule(cur, v) == Bump::strict
                      ? std::upper_bound(row.begin(), row.end(), cur)
                      : std::lower_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            return {static_cast<int>(r + 1), static_cast<int>(row.size())};
        }
        std::swap(cur, *it);
    }
}

Symbol reverse_inplace(std::vector<std::vector<Symbol>>& rows, CellPosition corner,
                       InsertionVariant v) {
    const std::size_t r0 = static_cast<std::size_t>(corner.row);
    if (corner.row < 1 || r0 > rows.size() ||
        static_cast<std::size_t>(corner.col) != rows[r0 - 1].size() ||
        (r0 < rows.size() && rows[r0].size() >= static_cast<std::size_t>(corner.col)))
        throw std::invalid_argument("cell is not a corner of the tableau");

    Symbol cur = rows[r0 - 1].back();
    rows[r0 - 1].pop_back();
    if (rows[r0 - 1].empty()) rows.pop_back();

    for (std::size_t r = r0 - 1; r >= 1; --r) {
        auto& row = rows[r - 1];
        // The element that displaced `cur` sits at the rightmost position
        // compatible with cur's own bumping rule.
        auto it = bump_rule(cur, v) == Bump::strict ? std::lower_bound(row.begin(), row.end(), cur)
                                                    : std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.begin()) throw std::invalid_argument("reverse insertion failed: no bumper");
        std::swap(cur, *(it - 1));
    }
    return cur;
}

}  // namespace detail

std::pair<Tableau, CellPosition> insert_symbol(const Tableau& t, Symbol s, InsertionVariant v) {
    if ((v == InsertionVariant::plain || v == InsertionVariant::dual) && s.starred())
        throw std::invalid_argument("starred symbol " + to_string(s) + " not allowed here");
    auto rows = t.row_data();
    CellPosition c = detail::insert_inplace(rows, s, v);
    return {Tableau(std::move(rows)), c};
}

std::pair<Tableau, CellPosition> insert_row(const Tableau& t, Symbol s) {
    return insert_symbol(t, s, InsertionVariant::plain);
}

std::pair<Tableau, CellPosition> insert_dual(const Tableau& t, Symbol s) {
    return insert_symbol(t, s, InsertionVariant::dual);
}

std::pair<Tableau, CellPosition> insert_mixed(const Tableau& t, Symbol s) {
    return insert_symbol(t, s, InsertionVariant::mixed);
}

std::pair<Tableau, CellPosition> insert_mixed_star(const Tableau& t, Symbol s) {
    return insert_symbol(t, s, InsertionVariant::mixed_star);
}

std::pair<Tableau, Symbol> reverse_insert(const Tableau& t, CellPosition corner,
                                          InsertionVariant v) {
    auto rows = t.row_data();
    Symbol s = detail::reverse_inplace(rows, corner, v);
    return {Tableau(std::move(rows)), s};
}

std::pair<Tableau, Symbol> reverse_insert_row(const Tableau& t, CellPosition corner) {
    return reverse_insert(t, corner, InsertionVariant::plain);
}

std::pair<Tableau, Symbol> reverse_insert_dual(const Tableau& t, CellPosition corner) {
    return reverse_insert(t, corner, InsertionVariant::dual);
}

Tableau transpose(const Tableau& t) {
    const auto& rows = t.row_data();
    if (rows.empty()) return {};
    std::vector<std::vector<Symbol>> cols(rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) cols[j].push_back(rows[i][j]);
    return Tableau(std::move(cols));
}

Tableau evacuation(const Tableau& q) {
    if (!is_standard(q)) throw std::invalid_argument("evacuation requires a standard tableau");
    auto cur = q.row_data();
    auto out = q.row_data();
    for (std::size_t remaining = q.size(); remaining > 0; --remaining) {
        // Empty the (1,1) cell and slide the hole inward until it reaches a
        // corner; the freed corner receives the largest unplaced entry.
        std::size_t r = 0, c = 0;
        while (!cur.empty()) {
            bool below = r + 1 < cur.size() && cur[r + 1].size() > c;
            bool right = cur[r].size() > c + 1;
            if (below && (!right || cur[r + 1][c] < cur[r][c + 1])) {
                cur[r][c] = cur[r + 1][c];
                ++r;
            } else if (right) {
                cur[r][c] = cur[r][c + 1];
                ++c;
            } else {
                break;
            }
        }
        out[r][c] = Symbol::row(static_cast<int>(remaining));
        cur[r].pop_back();
        if (cur[r].empty()) cur.pop_back();
    }
    return Tableau(std::move(out));
}

}  // namespace swg
