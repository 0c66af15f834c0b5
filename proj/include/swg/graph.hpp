#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "swg/tableau.hpp"
#include "swg/word.hpp"

namespace swg {

struct GraphEdge {
    int source;    // index into the source level
    Symbol label;  // inserted symbol
    int target;    // index into the next level
    auto operator<=>(const GraphEdge&) const = default;
};

// Level-by-level materialization of the Schur-Weyl graph: vertices of level n
// are the valid tableaux with n cells over A_k ∪ A*_l, edges are single-symbol
// insertions. Vertices are sorted by canonical serialization; edges by
// (source, label). Immutable once built.
struct GradedGraph {
    int k = 0;
    int l = 0;
    std::vector<std::vector<Tableau>> levels;
    std::vector<std::vector<GraphEdge>> edges;  // edges[n]: level n -> level n+1

    int depth() const { return static_cast<int>(levels.size()) - 1; }
};

GradedGraph build_graph(int k, int l, int depth, std::size_t max_vertices = 2'000'000);

// Covering of the Young graph: a tableau projects to its shape; the fiber over
// a diagram is every valid tableau of that shape.
YoungDiagram project(const Tableau& t);
std::vector<Tableau> fiber(const YoungDiagram& d, int k, int l);

// The k=2 coordinates (lambda, r): r counts the 1s in the part of row 1
// beyond column lambda_2.
struct Sw2Code {
    YoungDiagram shape;
    long long r = 0;
    bool operator==(const Sw2Code&) const = default;
    auto operator<=>(const Sw2Code&) const = default;
};

Sw2Code encode_sw2(const Tableau& t);
Tableau decode_sw2(const Sw2Code& code);

// Successors of a code under the two insertions, in label order (1 then 2).
std::vector<Sw2Code> sw2_successors(const Sw2Code& code);

// The maximal tableau S_lambda: each column of length i in the first k rows
// carries k-i+1..k; the part below row k is filled by the transposed column
// rule over the starred alphabet.
Tableau maximal_tableau(const YoungDiagram& d, int k, int l);

// Words as paths: vertex at step n is P([w]_n); the edge label is w_n.
std::vector<Tableau> word_to_path(const Word& w);
Word path_to_word(const std::vector<Tableau>& path, int k, int l);

std::string export_text(const GradedGraph& g);
std::string export_json(const GradedGraph& g);

}  // namespace swg
