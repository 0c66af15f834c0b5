#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "swg/numeric.hpp"

namespace swg {

// 1-based cell address, matching the usual matrix indexing of diagrams.
struct CellPosition {
    int row = 0;
    int col = 0;
    auto operator<=>(const CellPosition&) const = default;
};

// Frobenius coordinates (arms | legs) along the main diagonal.
struct FrobeniusCoords {
    std::vector<long long> arms;  // strictly decreasing, >= 0
    std::vector<long long> legs;  // strictly decreasing, >= 0
    bool operator==(const FrobeniusCoords&) const = default;
};

class YoungDiagram {
public:
    YoungDiagram() = default;  // empty diagram
    explicit YoungDiagram(std::vector<long long> rows);

    const std::vector<long long>& rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }
    long long row(int r) const;  // 1-based; 0 beyond the last row
    long long col(int c) const;  // conjugate row length, 1-based
    long long size() const { return size_; }
    bool empty() const { return rows_.empty(); }

    bool contains_cell(CellPosition c) const;
    bool contains(const YoungDiagram& inner) const;  // cellwise containment

    // (r,c) is a corner iff removing it leaves a valid diagram.
    bool is_corner(CellPosition c) const;
    std::vector<CellPosition> corners() const;
    std::vector<CellPosition> addable_cells() const;

    YoungDiagram with_cell_removed(CellPosition c) const;
    YoungDiagram with_cell_added(CellPosition c) const;

    YoungDiagram conjugate() const;

    auto operator<=>(const YoungDiagram& o) const { return rows_ <=> o.rows_; }
    bool operator==(const YoungDiagram& o) const = default;

private:
    std::vector<long long> rows_;  // weakly decreasing, no trailing zeros
    long long size_ = 0;
};

FrobeniusCoords frobenius(const YoungDiagram& d);
YoungDiagram diagram_from_frobenius(const FrobeniusCoords& f);

// "3,2,1"; empty diagram = "∅".
std::string to_string(const YoungDiagram& d);
YoungDiagram parse_diagram(std::string_view text);

// All partitions of n, optionally with a row-count bound (0 = unbounded),
// in lexicographically decreasing order starting from (n).
std::vector<YoungDiagram> partitions_of(int n, int max_rows = 0);

}  // namespace swg
