#pragma once

#include <cstddef>
#include <vector>

#include "swg/insertion.hpp"
#include "swg/numeric.hpp"
#include "swg/tableau.hpp"
#include "swg/word.hpp"

namespace swg {

struct RskPair {
    Tableau p;  // semistandard / dual / hook-semistandard, by variant
    Tableau q;  // standard, records insertion order
    bool operator==(const RskPair&) const = default;
};

RskPair rsk_variant(const Word& w, InsertionVariant v);
RskPair rsk(const Word& w);             // ordinary RSK, unstarred words
RskPair rsk_star(const Word& w);        // dual RSK*, unstarred words
RskPair rsk_mixed(const Word& w);       // mixed alphabet, P hook-semistandard
RskPair rsk_mixed_star(const Word& w);  // the dual of the mixed algorithm

// Word recovered from a pair (p, q): the unique w with rsk_variant(w, v) == pair.
Word inverse_rsk(const RskPair& pair, InsertionVariant v, int k, int l);

// Shape of RSK(w) (mixed insertion; coincides with ordinary RSK on pure words).
YoungDiagram word_shape(const Word& w);

// Standard tableau assembled from the sequence of cells added per step.
Tableau standard_from_growth(const std::vector<CellPosition>& cells);

// Per-step record of the cell added by the dual algorithm: column number for
// row symbols, row number (as a starred symbol) for column symbols. The
// result is a lattice word in the pure case.
Word psi(const Word& u);

// Element of S_m(nu): cells of nu labeled 1..m, entries decreasing along rows
// and columns; removing cells in label order keeps a valid diagram.
class SkewDecreasingFilling {
public:
    SkewDecreasingFilling(YoungDiagram outer, std::vector<CellPosition> cells);

    const YoungDiagram& outer() const { return outer_; }
    const YoungDiagram& inner() const { return inner_; }  // outer minus cells
    std::size_t size() const { return cells_.size(); }
    CellPosition cell(int label) const;  // 1-based label

    bool operator==(const SkewDecreasingFilling&) const = default;

private:
    YoungDiagram outer_;
    YoungDiagram inner_;
    std::vector<CellPosition> cells_;
};

// All of S_m(nu), deterministic order.
std::vector<SkewDecreasingFilling> skew_fillings(const YoungDiagram& nu, int m);

// Phi_T(S): the word recovered by reverse insertions on the transpose of T
// along the deletion schedule S. Works for semistandard and hook-semistandard T.
Word phi(const Tableau& t, const SkewDecreasingFilling& s);

// w_S: the row numbers of the cells of S, in label order.
Word word_of_filling(const SkewDecreasingFilling& s);

// Dimension of the diagram left after deleting the cells of S.
Integer d_of_filling(const SkewDecreasingFilling& s);

// c_a(T) = #{y : P(y) = T, [y]_m = a}, via the deletion-schedule formula and
// by direct enumeration. The two must agree.
Integer c_a_formula(const Tableau& t, const Word& a);
Integer c_a_bruteforce(const Tableau& t, const Word& a, int k, int l = 0,
                       std::size_t guard = 10'000'000);

// Words u with P(u) = t, resp. Q(u) = q; lexicographic order.
std::vector<Word> plactic_class(const Tableau& t, InsertionVariant v = InsertionVariant::plain,
                                std::size_t guard = 10'000'000);
std::vector<Word> coplactic_class(const Tableau& q, int k, int l = 0,
                                  InsertionVariant v = InsertionVariant::plain,
                                  std::size_t guard = 10'000'000);

// Greene invariants: g_j = largest total size of a union of j disjoint
// increasing (a<b, or a=b for row symbols) subsequences, j = 1..depth.
// Brute force over subsets; guard n <= 12.
std::vector<long long> greene_increasing(const Word& w, int depth);
std::vector<long long> greene_decreasing(const Word& w, int depth);

}  // namespace swg
