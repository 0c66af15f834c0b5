#pragma once

#include <utility>
#include <vector>

#include "swg/tableau.hpp"

namespace swg {

// Bumping disciplines:
//   plain       every element bumps the leftmost entry strictly greater
//   dual        every element bumps the leftmost entry greater or equal
//   mixed       plain for row symbols, dual for column symbols
//   mixed_star  dual for row symbols, plain for column symbols
// In the mixed variants the rule travels with each bumped element.
enum class InsertionVariant { plain, dual, mixed, mixed_star };

namespace detail {

// In-place cores for bulk folds (trajectory youngization, graph building).
CellPosition insert_inplace(std::vector<std::vector<Symbol>>& rows, Symbol s,
                            InsertionVariant v);
Symbol reverse_inplace(std::vector<std::vector<Symbol>>& rows, CellPosition corner,
                       InsertionVariant v);

}  // namespace detail

std::pair<Tableau, CellPosition> insert_symbol(const Tableau& t, Symbol s, InsertionVariant v);
std::pair<Tableau, CellPosition> insert_row(const Tableau& t, Symbol s);    // rejects starred s
std::pair<Tableau, CellPosition> insert_dual(const Tableau& t, Symbol s);   // rejects starred s
std::pair<Tableau, CellPosition> insert_mixed(const Tableau& t, Symbol s);
std::pair<Tableau, CellPosition> insert_mixed_star(const Tableau& t, Symbol s);

// Exact inverses: reverse_insert(insert(t, s)) == (t, s) and
// insert(reverse_insert(t, c)) == (t, c) for a corner c of sh(t).
std::pair<Tableau, Symbol> reverse_insert(const Tableau& t, CellPosition corner,
                                          InsertionVariant v);
std::pair<Tableau, Symbol> reverse_insert_row(const Tableau& t, CellPosition corner);
std::pair<Tableau, Symbol> reverse_insert_dual(const Tableau& t, CellPosition corner);

Tableau transpose(const Tableau& t);

// Schützenberger involution via iterated jeu-de-taquin slides; standard input.
Tableau evacuation(const Tableau& q);

}  // namespace swg
