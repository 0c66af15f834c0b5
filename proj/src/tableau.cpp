#include "swg/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace swg {

std::string to_string(TableauKind k) {
    switch (k) {
        case TableauKind::standard: return "standard";
        case TableauKind::semistandard: return "semistandard";
        case TableauKind::dual_semistandard: return "dual-semistandard";
        case TableauKind::hook_semistandard: return "hook-semistandard";
    }
    return "?";
}

Tableau::Tableau(std::vector<std::vector<Symbol>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) throw std::invalid_argument("empty row inside tableau");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size())
            throw std::invalid_argument("tableau rows must weakly shorten");
        size_ += rows_[i].size();
    }
}

YoungDiagram Tableau::shape() const {
    std::vector<long long> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) rows.push_back(static_cast<long long>(r.size()));
    return YoungDiagram(std::move(rows));
}

Symbol Tableau::at(CellPosition c) const {
    if (c.row < 1 || c.col < 1 || static_cast<std::size_t>(c.row) > rows_.size() ||
        static_cast<std::size_t>(c.col) > rows_[c.row - 1].size())
        throw std::out_of_range("cell outside tableau");
    return rows_[c.row - 1][c.col - 1];
}

std::map<Symbol, long long> Tableau::content() const {
    std::map<Symbol, long long> counts;
    for (const auto& row : rows_)
        for (Symbol s : row) ++counts[s];
    return counts;
}

bool Tableau::operator<(const Tableau& o) const {
    return std::lexicographical_compare(
        rows_.begin(), rows_.end(), o.rows_.begin(), o.rows_.end(),
        [](const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
}

namespace {

// Local comparison rules:
//   semistandard        rows weak, columns strict
//   dual_semistandard   rows strict, columns weak
//   hook_semistandard   rows weak with ties only between row symbols,
//                       columns weak with ties only between column symbols
bool check_neighbors(const Tableau& t, TableauKind kind) {
    const auto& rows = t.row_data();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j + 1 < rows[i].size(); ++j) {
            Symbol a = rows[i][j], b = rows[i][j + 1];
            if (a > b) return false;
            if (a == b) {
                if (kind == TableauKind::dual_semistandard || kind == TableauKind::standard)
                    return false;
                if (kind == TableauKind::hook_semistandard && a.starred()) return false;
            }
        }
        if (i + 1 < rows.size()) {
            for (std::size_t j = 0; j < rows[i + 1].size(); ++j) {
                Symbol a = rows[i][j], b = rows[i + 1][j];
                if (a > b) return false;
                if (a == b) {
                    if (kind == TableauKind::semistandard || kind == TableauKind::standard)
                        return false;
                    if (kind == TableauKind::hook_semistandard && !a.starred()) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

bool is_standard(const Tableau& t) {
    if (!check_neighbors(t, TableauKind::standard)) return false;
    std::vector<bool> seen(t.size(), false);
    for (const auto& row : t.row_data())
        for (Symbol s : row) {
            if (s.starred()) return false;
            int v = s.value();
            if (v < 1 || static_cast<std::size_t>(v) > t.size() || seen[v - 1]) return false;
            seen[v - 1] = true;
        }
    return true;
}

bool is_semistandard(const Tableau& t, int k) {
    for (const auto& row : t.row_data())
        for (Symbol s : row)
            if (s.starred() || s.value() > k) return false;
    return check_neighbors(t, TableauKind::semistandard);
}

bool is_dual_semistandard(const Tableau& t, int k) {
    for (const auto& row : t.row_data())
        for (Symbol s : row)
            if (s.starred() || s.value() > k) return false;
    return check_neighbors(t, TableauKind::dual_semistandard);
}

bool is_hook_semistandard(const Tableau& t, int k, int l) {
    for (const auto& row : t.row_data())
        for (Symbol s : row)
            if (s.value() > (s.starred() ? l : k)) return false;
    return check_neighbors(t, TableauKind::hook_semistandard);
}

bool is_valid(const Tableau& t, TableauKind kind, int k, int l) {
    switch (kind) {
        case TableauKind::standard: return is_standard(t);
        case TableauKind::semistandard: return is_semistandard(t, k);
        case TableauKind::dual_semistandard: return is_dual_semistandard(t, k);
        case TableauKind::hook_semistandard: return is_hook_semistandard(t, k, l);
    }
    return false;
}

std::string to_string(const Tableau& t) {
    if (t.empty()) return "∅";
    std::string out;
    for (std::size_t i = 0; i < t.row_data().size(); ++i) {
        if (i) out += '/';
        const auto& row = t.row_data()[i];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += to_string(row[j]);
        }
    }
    return out;
}

Tableau parse_tableau(std::string_view text) {
    if (text.empty() || text == "∅") return {};
    std::vector<std::vector<Symbol>> rows;
    std::size_t start = 0;
    rows.emplace_back();
    for (std::size_t i = start; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '/' || text[i] == ',') {
            rows.back().push_back(parse_symbol(text.substr(start, i - start)));
            if (i < text.size() && text[i] == '/') rows.emplace_back();
            start = i + 1;
        }
    }
    return Tableau(std::move(rows));
}

}  // namespace swg
