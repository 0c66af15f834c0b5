#include "swg/rsk.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "swg/young.hpp"

namespace swg {

RskPair rsk_variant(const Word& w, InsertionVariant v) {
    if (v == InsertionVariant::plain || v == InsertionVariant::dual)
        for (Symbol s : w.symbols())
            if (s.starred())
                throw std::invalid_argument("starred symbol " + to_string(s) +
                                            " outside the pure alphabet");
    std::vector<std::vector<Symbol>> p, q;
    for (std::size_t i = 0; i < w.size(); ++i) {
        CellPosition c = detail::insert_inplace(p, w.at(i), v);
        if (static_cast<std::size_t>(c.row) > q.size()) q.emplace_back();
        q[c.row - 1].push_back(Symbol::row(static_cast<int>(i + 1)));
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

RskPair rsk(const Word& w) { return rsk_variant(w, InsertionVariant::plain); }
RskPair rsk_star(const Word& w) { return rsk_variant(w, InsertionVariant::dual); }
RskPair rsk_mixed(const Word& w) { return rsk_variant(w, InsertionVariant::mixed); }
RskPair rsk_mixed_star(const Word& w) { return rsk_variant(w, InsertionVariant::mixed_star); }

Word inverse_rsk(const RskPair& pair, InsertionVariant v, int k, int l) {
    if (pair.p.shape() != pair.q.shape()) throw std::invalid_argument("P/Q shape mismatch");
    if (!is_standard(pair.q)) throw std::invalid_argument("Q must be standard");
    const std::size_t n = pair.q.size();
    std::vector<CellPosition> cell_of(n);
    const auto& qrows = pair.q.row_data();
    for (std::size_t r = 0; r < qrows.size(); ++r)
        for (std::size_t c = 0; c < qrows[r].size(); ++c)
            cell_of[qrows[r][c].value() - 1] = {static_cast<int>(r + 1), static_cast<int>(c + 1)};

    auto rows = pair.p.row_data();
    std::vector<Symbol> syms(n);
    for (std::size_t i = n; i >= 1; --i)
        syms[i - 1] = detail::reverse_inplace(rows, cell_of[i - 1], v);
    return Word(std::move(syms), k, l);
}

YoungDiagram word_shape(const Word& w) {
    std::vector<std::vector<Symbol>> p;
    for (std::size_t i = 0; i < w.size(); ++i)
        detail::insert_inplace(p, w.at(i), InsertionVariant::mixed);
    std::vector<long long> rows;
    rows.reserve(p.size());
    for (const auto& r : p) rows.push_back(static_cast<long long>(r.size()));
    return YoungDiagram(std::move(rows));
}

Tableau standard_from_growth(const std::vector<CellPosition>& cells) {
    std::vector<std::vector<Symbol>> rows;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const CellPosition& c = cells[i];
        if (static_cast<std::size_t>(c.row) == rows.size() + 1) rows.emplace_back();
        if (static_cast<std::size_t>(c.row) > rows.size() ||
            rows[c.row - 1].size() + 1 != static_cast<std::size_t>(c.col))
            throw std::invalid_argument("growth sequence is not monotone");
        rows[c.row - 1].push_back(Symbol::row(static_cast<int>(i + 1)));
    }
    return Tableau(std::move(rows));
}

Word psi(const Word& u) {
    std::vector<std::vector<Symbol>> p;
    std::vector<Symbol> out;
    out.reserve(u.size());
    int max_row_value = 0, max_col_value = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        CellPosition c = detail::insert_inplace(p, u.at(i), InsertionVariant::mixed_star);
        if (u.at(i).starred()) {
            out.push_back(Symbol::column(c.row));
            max_col_value = std::max(max_col_value, c.row);
        } else {
            out.push_back(Symbol::row(c.col));
            max_row_value = std::max(max_row_value, c.col);
        }
    }
    return Word(std::move(out), std::max(u.k(), max_row_value), std::max(u.l(), max_col_value));
}

SkewDecreasingFilling::SkewDecreasingFilling(YoungDiagram outer, std::vector<CellPosition> cells)
    : outer_(std::move(outer)), cells_(std::move(cells)) {
    YoungDiagram cur = outer_;
    for (const CellPosition& c : cells_) {
        if (!cur.is_corner(c))
            throw std::invalid_argument("cells do not form a valid deletion schedule");
        cur = cur.with_cell_removed(c);
    }
    inner_ = cur;
}

CellPosition SkewDecreasingFilling::cell(int label) const {
    if (label < 1 || static_cast<std::size_t>(label) > cells_.size())
        throw std::out_of_range("bad label");
    return cells_[label - 1];
}

namespace {

void skew_fillings_rec(const YoungDiagram& cur, int remaining,
                       std::vector<CellPosition>& acc, const YoungDiagram& outer,
                       std::vector<SkewDecreasingFilling>& out) {
    if (remaining == 0) {
        out.emplace_back(outer, acc);
        return;
    }
    for (CellPosition c : cur.corners()) {
        acc.push_back(c);
        skew_fillings_rec(cur.with_cell_removed(c), remaining - 1, acc, outer, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<SkewDecreasingFilling> skew_fillings(const YoungDiagram& nu, int m) {
    if (m < 0 || m > nu.size()) throw std::invalid_argument("bad filling size");
    std::vector<SkewDecreasingFilling> out;
    std::vector<CellPosition> acc;
    skew_fillings_rec(nu, m, acc, nu, out);
    return out;
}

Word phi(const Tableau& t, const SkewDecreasingFilling& s) {
    if (t.shape() != s.outer()) throw std::invalid_argument("shape of T differs from outer shape of S");
    auto rows = transpose(t).row_data();
    std::vector<Symbol> out;
    out.reserve(s.size());
    int max_row_value = 0, max_col_value = 0;
    for (std::size_t j = 1; j <= s.size(); ++j) {
        CellPosition c = s.cell(static_cast<int>(j));
        Symbol sym = detail::reverse_inplace(rows, {c.col, c.row}, InsertionVariant::mixed_star);
        out.push_back(sym);
        if (sym.starred())
            max_col_value = std::max(max_col_value, sym.value());
        else
            max_row_value = std::max(max_row_value, sym.value());
    }
    return Word(std::move(out), max_row_value, max_col_value);
}

Word word_of_filling(const SkewDecreasingFilling& s) {
    std::vector<Symbol> out;
    out.reserve(s.size());
    int max_value = 1;
    for (std::size_t j = 1; j <= s.size(); ++j) {
        int row = s.cell(static_cast<int>(j)).row;
        out.push_back(Symbol::row(row));
        max_value = std::max(max_value, row);
    }
    return Word(std::move(out), max_value, 0);
}

Integer d_of_filling(const SkewDecreasingFilling& s) { return dim_hook(s.inner()); }

Integer c_a_formula(const Tableau& t, const Word& a) {
    const int m = static_cast<int>(a.size());
    if (static_cast<std::size_t>(m) > t.size())
        throw std::invalid_argument("prefix longer than tableau");
    Integer total = 0;
    for (const auto& s : skew_fillings(t.shape(), m))
        if (phi(t, s) == a) total += d_of_filling(s);
    return total;
}

Integer c_a_bruteforce(const Tableau& t, const Word& a, int k, int l, std::size_t guard) {
    if (a.size() > t.size()) throw std::invalid_argument("prefix longer than tableau");
    InsertionVariant v = l > 0 ? InsertionVariant::mixed : InsertionVariant::plain;
    Integer count = 0;
    for (const Word& y : all_words(k, l, t.size(), guard)) {
        if (!(y.prefix(a.size()) == a)) continue;
        if (rsk_variant(y, v).p == t) ++count;
    }
    return count;
}

std::vector<Word> plactic_class(const Tableau& t, InsertionVariant v, std::size_t guard) {
    int k = 0, l = 0;
    for (const auto& [sym, cnt] : t.content())
        (sym.starred() ? l : k) = std::max(sym.starred() ? l : k, sym.value());
    Integer dim = dim_hook(t.shape());
    if (dim > static_cast<long>(guard)) throw std::length_error("plactic class guard exceeded");
    std::vector<Word> out;
    for (const Tableau& q : enumerate_syt(t.shape()))
        out.push_back(inverse_rsk({t, q}, v, k, l));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> coplactic_class(const Tableau& q, int k, int l, InsertionVariant v,
                                  std::size_t guard) {
    std::vector<Tableau> fibers = l > 0 ? enumerate_hook_ssyt(q.shape(), k, l)
                                        : enumerate_ssyt(q.shape(), k);
    if (fibers.size() > guard) throw std::length_error("coplactic class guard exceeded");
    std::vector<Word> out;
    out.reserve(fibers.size());
    for (const Tableau& p : fibers) out.push_back(inverse_rsk({p, q}, v, k, l));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// a precedes b in an increasing subsequence
bool rel_incr(Symbol a, Symbol b) { return a < b || (a == b && !a.starred()); }
// a precedes b in a decreasing subsequence
bool rel_decr(Symbol a, Symbol b) { return a > b || (a == b && a.starred()); }

std::vector<long long> greene_core(const Word& w, int depth, bool increasing) {
    const std::size_t n = w.size();
    if (n > 12) throw std::length_error("greene invariants: brute-force guard is n <= 12");
    if (depth < 0) throw std::invalid_argument("negative depth");

    // Union of j disjoint increasing subsequences <=> no "opposite" chain of
    // length j+1 inside the subset (Dilworth duality for this relation pair).
    auto opposite = increasing ? rel_decr : rel_incr;
    std::vector<long long> best(static_cast<std::size_t>(depth) + 1, 0);
    std::vector<int> chain(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int longest = 0;
        int count = std::popcount(mask);
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            chain[i] = 1;
            for (std::size_t j = 0; j < i; ++j)
                if ((mask >> j & 1) && opposite(w.at(j), w.at(i)))
                    chain[i] = std::max(chain[i], chain[j] + 1);
            longest = std::max(longest, chain[i]);
        }
        for (int j = std::max(longest, 1); j <= depth; ++j)
            best[j] = std::max<long long>(best[j], count);
    }
    return std::vector<long long>(best.begin() + 1, best.end());
}

}  // namespace

std::vector<long long> greene_increasing(const Word& w, int depth) {
    return greene_core(w, depth, true);
}

std::vector<long long> greene_decreasing(const Word& w, int depth) {
    return greene_core(w, depth, false);
}

}  // namespace swg
