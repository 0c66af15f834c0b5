#include "swg/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace swg {

YoungDiagram::YoungDiagram(std::vector<long long> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0) throw std::invalid_argument("negative row length");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("row lengths must be weakly decreasing");
    }
    size_ = std::accumulate(rows_.begin(), rows_.end(), 0LL);
}

long long YoungDiagram::row(int r) const {
    if (r < 1) throw std::out_of_range("row index is 1-based");
    return static_cast<std::size_t>(r) <= rows_.size() ? rows_[r - 1] : 0;
}

long long YoungDiagram::col(int c) const {
    if (c < 1) throw std::out_of_range("column index is 1-based");
    long long count = 0;
    for (long long len : rows_)
        if (len >= c) ++count;
    return count;
}

bool YoungDiagram::contains_cell(CellPosition c) const {
    return c.row >= 1 && c.col >= 1 && row(c.row) >= c.col;
}

bool YoungDiagram::contains(const YoungDiagram& inner) const {
    for (std::size_t i = 0; i < inner.rows_.size(); ++i)
        if (i >= rows_.size() || inner.rows_[i] > rows_[i]) return false;
    return true;
}

bool YoungDiagram::is_corner(CellPosition c) const {
    if (!contains_cell(c)) return false;
    return row(c.row) == c.col && row(c.row + 1) < c.col;
}

std::vector<CellPosition> YoungDiagram::corners() const {
    std::vector<CellPosition> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i + 1 == rows_.size() || rows_[i + 1] < rows_[i])
            out.push_back({static_cast<int>(i + 1), static_cast<int>(rows_[i])});
    }
    return out;
}

std::vector<CellPosition> YoungDiagram::addable_cells() const {
    std::vector<CellPosition> out;
    for (std::size_t i = 0; i <= rows_.size(); ++i) {
        long long len = i < rows_.size() ? rows_[i] : 0;
        long long above = i == 0 ? -1 : rows_[i - 1];
        if (i == 0 || len < above)
            out.push_back({static_cast<int>(i + 1), static_cast<int>(len + 1)});
    }
    return out;
}

YoungDiagram YoungDiagram::with_cell_removed(CellPosition c) const {
    if (!is_corner(c)) throw std::invalid_argument("cell is not a corner");
    auto rows = rows_;
    rows[c.row - 1] -= 1;
    return YoungDiagram(std::move(rows));
}

YoungDiagram YoungDiagram::with_cell_added(CellPosition c) const {
    auto rows = rows_;
    if (static_cast<std::size_t>(c.row) == rows.size() + 1)
        rows.push_back(0);
    else if (c.row < 1 || static_cast<std::size_t>(c.row) > rows.size())
        throw std::invalid_argument("cell not addable");
    if (rows[c.row - 1] + 1 != c.col) throw std::invalid_argument("cell not addable");
    rows[c.row - 1] += 1;
    return YoungDiagram(std::move(rows));
}

YoungDiagram YoungDiagram::conjugate() const {
    std::vector<long long> cols;
    if (!rows_.empty()) {
        cols.resize(static_cast<std::size_t>(rows_[0]), 0);
        for (long long len : rows_)
            for (long long j = 0; j < len; ++j) ++cols[j];
    }
    return YoungDiagram(std::move(cols));
}

FrobeniusCoords frobenius(const YoungDiagram& d) {
    FrobeniusCoords f;
    for (int i = 1;; ++i) {
        if (d.row(i) < i) break;  // past the Durfee square
        f.arms.push_back(d.row(i) - i);
        f.legs.push_back(d.col(i) - i);
    }
    return f;
}

YoungDiagram diagram_from_frobenius(const FrobeniusCoords& f) {
    if (f.arms.size() != f.legs.size())
        throw std::invalid_argument("arm/leg count mismatch");
    const std::size_t d = f.arms.size();
    for (std::size_t i = 0; i < d; ++i) {
        if (f.arms[i] < 0 || f.legs[i] < 0) throw std::invalid_argument("negative Frobenius coordinate");
        if (i > 0 && (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1]))
            throw std::invalid_argument("Frobenius coordinates must strictly decrease");
    }
    std::size_t row_count = d;
    for (std::size_t i = 0; i < d; ++i)
        row_count = std::max(row_count, static_cast<std::size_t>(i + 1 + f.legs[i]));
    std::vector<long long> rows(row_count, 0);
    for (std::size_t i = 0; i < d; ++i) {
        rows[i] = static_cast<long long>(i + 1) + f.arms[i];
        for (std::size_t r = i + 1; r <= i + static_cast<std::size_t>(f.legs[i]); ++r)
            rows[r] = std::max<long long>(rows[r], static_cast<long long>(i + 1));
    }
    return YoungDiagram(std::move(rows));
}

std::string to_string(const YoungDiagram& d) {
    if (d.empty()) return "∅";
    std::string out;
    for (std::size_t i = 0; i < d.row_count(); ++i) {
        if (i) out += ',';
        out += std::to_string(d.rows()[i]);
    }
    return out;
}

YoungDiagram parse_diagram(std::string_view text) {
    if (text.empty() || text == "∅") return {};
    std::vector<long long> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || ptr != piece.data() + piece.size())
            throw std::invalid_argument("bad diagram: " + std::string(text));
        rows.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return YoungDiagram(std::move(rows));
}

namespace {

void partitions_rec(int remaining, long long max_part, int max_rows,
                    std::vector<long long>& acc, std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_rows > 0 && acc.size() == static_cast<std::size_t>(max_rows)) return;
    for (long long part = std::min<long long>(max_part, remaining); part >= 1; --part) {
        acc.push_back(part);
        partitions_rec(remaining - static_cast<int>(part), part, max_rows, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n, int max_rows) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<YoungDiagram> out;
    std::vector<long long> acc;
    partitions_rec(n, n, max_rows, acc, out);
    return out;
}

}  // namespace swg
