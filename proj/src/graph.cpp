#include "swg/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "swg/insertion.hpp"
#include "swg/young.hpp"

#include <json.hpp>

namespace swg {

namespace {

std::vector<Symbol> alphabet_symbols(int k, int l) {
    std::vector<Symbol> out;
    for (int v = 1; v <= k; ++v) out.push_back(Symbol::row(v));
    for (int v = l; v >= 1; --v) out.push_back(Symbol::column(v));
    return out;
}

}  // namespace

GradedGraph build_graph(int k, int l, int depth, std::size_t max_vertices) {
    if (k < 0 || l < 0 || k + l == 0) throw std::invalid_argument("empty alphabet");
    if (depth < 0) throw std::invalid_argument("negative depth");

    GradedGraph g;
    g.k = k;
    g.l = l;
    g.levels.push_back({Tableau()});
    const auto alphabet = alphabet_symbols(k, l);

    std::size_t total = 1;
    for (int level = 0; level < depth; ++level) {
        // Serialize-keyed map gives the deterministic vertex order of the
        // next level while deduplicating insertion targets.
        std::map<std::string, Tableau> next;
        struct PendingEdge {
            int source;
            Symbol label;
            std::string target_key;
        };
        std::vector<PendingEdge> pending;
        for (std::size_t i = 0; i < g.levels[level].size(); ++i) {
            for (Symbol s : alphabet) {
                auto [t, cell] = insert_mixed(g.levels[level][i], s);
                std::string key = to_string(t);
                pending.push_back({static_cast<int>(i), s, key});
                next.emplace(std::move(key), std::move(t));
            }
        }
        total += next.size();
        if (total > max_vertices) throw std::length_error("graph vertex guard exceeded");

        std::map<std::string, int> index;
        std::vector<Tableau> vertices;
        vertices.reserve(next.size());
        for (auto& [key, t] : next) {
            index.emplace(key, static_cast<int>(vertices.size()));
            vertices.push_back(std::move(t));
        }
        std::vector<GraphEdge> edges;
        edges.reserve(pending.size());
        for (const auto& e : pending) edges.push_back({e.source, e.label, index.at(e.target_key)});
        std::sort(edges.begin(), edges.end());
        g.levels.push_back(std::move(vertices));
        g.edges.push_back(std::move(edges));
    }
    return g;
}

YoungDiagram project(const Tableau& t) { return t.shape(); }

std::vector<Tableau> fiber(const YoungDiagram& d, int k, int l) {
    return l == 0 ? enumerate_ssyt(d, k) : enumerate_hook_ssyt(d, k, l);
}

Sw2Code encode_sw2(const Tableau& t) {
    if (!is_semistandard(t, 2)) throw std::invalid_argument("encode_sw2 expects a semistandard tableau over {1,2}");
    YoungDiagram shape = t.shape();
    if (shape.row_count() > 2) throw std::invalid_argument("more than two rows");
    long long r = 0;
    for (long long j = shape.row(2) + 1; j <= shape.row(1); ++j)
        if (t.at(1, static_cast<int>(j)) == Symbol::row(1)) ++r;
    return {std::move(shape), r};
}

Tableau decode_sw2(const Sw2Code& code) {
    const long long l1 = code.shape.row(1), l2 = code.shape.row(2);
    if (code.shape.row_count() > 2 || code.r < 0 || code.r > l1 - l2)
        throw std::invalid_argument("bad SW_2 code");
    std::vector<std::vector<Symbol>> rows;
    if (l1 > 0) {
        std::vector<Symbol> row1;
        for (long long j = 0; j < l2 + code.r; ++j) row1.push_back(Symbol::row(1));
        for (long long j = l2 + code.r; j < l1; ++j) row1.push_back(Symbol::row(2));
        rows.push_back(std::move(row1));
    }
    if (l2 > 0) rows.emplace_back(static_cast<std::size_t>(l2), Symbol::row(2));
    return Tableau(std::move(rows));
}

std::vector<Sw2Code> sw2_successors(const Sw2Code& code) {
    const long long l1 = code.shape.row(1), l2 = code.shape.row(2);
    const long long gap = l1 - l2;
    YoungDiagram longer({l1 + 1, l2});
    // inserting 1: grows row 1 when it is all 1s, else bumps a 2 down
    std::vector<Sw2Code> out;
    if (code.r == gap) {
        out.push_back({longer, code.r + 1});
    } else {
        out.push_back({YoungDiagram({l1, l2 + 1}), code.r});
    }
    // inserting 2 always extends row 1
    out.push_back({std::move(longer), code.r});
    return out;
}

Tableau maximal_tableau(const YoungDiagram& d, int k, int l) {
    if (l == 0 && static_cast<int>(d.row_count()) > k)
        throw std::invalid_argument("shape has more than k rows");
    if (l > 0 && d.row(k + 1) > l)
        throw std::invalid_argument("shape does not fit the (k,l) hook");

    std::vector<std::vector<Symbol>> rows;
    const int top = std::min<int>(k, static_cast<int>(d.row_count()));
    YoungDiagram conj = d.conjugate();
    for (int i = 1; i <= top; ++i) {
        std::vector<Symbol> row;
        for (long long j = 1; j <= d.row(i); ++j) {
            int column_height = std::min<long long>(conj.row(static_cast<int>(j)), k);
            row.push_back(Symbol::row(k - column_height + i));
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t i = static_cast<std::size_t>(k) + 1; i <= d.row_count(); ++i) {
        std::vector<Symbol> row;
        long long len = d.row(static_cast<int>(i));
        for (long long j = 1; j <= len; ++j)
            row.push_back(Symbol::column(static_cast<int>(len - j + 1)));
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

std::vector<Tableau> word_to_path(const Word& w) {
    std::vector<Tableau> path;
    path.reserve(w.size() + 1);
    path.emplace_back();
    std::vector<std::vector<Symbol>> rows;
    for (std::size_t i = 0; i < w.size(); ++i) {
        detail::insert_inplace(rows, w.at(i), InsertionVariant::mixed);
        path.emplace_back(rows);
    }
    return path;
}

Word path_to_word(const std::vector<Tableau>& path, int k, int l) {
    if (path.empty() || !path.front().empty())
        throw std::invalid_argument("path must start at the empty tableau");
    std::vector<Symbol> syms;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto before = path[i].content();
        Symbol label;
        bool found = false;
        for (const auto& [sym, count] : path[i + 1].content()) {
            auto it = before.find(sym);
            long long prev = it == before.end() ? 0 : it->second;
            if (count == prev) continue;
            if (count != prev + 1 || found)
                throw std::invalid_argument("consecutive tableaux differ by more than one symbol");
            label = sym;
            found = true;
        }
        if (!found) throw std::invalid_argument("consecutive tableaux are identical");
        if (insert_mixed(path[i], label).first != path[i + 1])
            throw std::invalid_argument("not an insertion edge at step " + std::to_string(i + 1));
        syms.push_back(label);
    }
    return Word(std::move(syms), k, l);
}

std::string export_text(const GradedGraph& g) {
    std::string out = "schur-weyl-graph k=" + std::to_string(g.k) + " l=" + std::to_string(g.l) +
                      " depth=" + std::to_string(g.depth()) + "\n";
    for (std::size_t n = 0; n < g.levels.size(); ++n) {
        out += "level " + std::to_string(n) + " vertices=" + std::to_string(g.levels[n].size()) + "\n";
        for (std::size_t i = 0; i < g.levels[n].size(); ++i)
            out += "vertex " + std::to_string(n) + " " + std::to_string(i) + " " +
                   to_string(g.levels[n][i]) + "\n";
    }
    for (std::size_t n = 0; n < g.edges.size(); ++n)
        for (const GraphEdge& e : g.edges[n])
            out += "edge " + std::to_string(n) + " " + std::to_string(e.source) + " " +
                   to_string(e.label) + " " + std::to_string(e.target) + "\n";
    return out;
}

std::string export_json(const GradedGraph& g) {
    nlohmann::ordered_json j;
    j["k"] = g.k;
    j["l"] = g.l;
    j["depth"] = g.depth();
    auto& levels = j["levels"] = nlohmann::ordered_json::array();
    for (const auto& level : g.levels) {
        nlohmann::ordered_json jl = nlohmann::ordered_json::array();
        for (const Tableau& t : level) jl.push_back(to_string(t));
        levels.push_back(std::move(jl));
    }
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& level : g.edges) {
        nlohmann::ordered_json je = nlohmann::ordered_json::array();
        for (const GraphEdge& e : level)
            je.push_back({e.source, to_string(e.label), e.target});
        edges.push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

}  // namespace swg
