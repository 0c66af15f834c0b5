// End-to-end acceptance harness. Each numbered check prints one PASS/FAIL
// line; the binary exits nonzero if any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "swg/ergodic.hpp"
#include "swg/graph.hpp"
#include "swg/insertion.hpp"
#include "swg/rsk.hpp"
#include "swg/verify.hpp"
#include "swg/young.hpp"

using namespace swg;

namespace {

int failures_total = 0;

void report(int number, const std::string& title, bool ok, double seconds,
            const std::string& detail = "") {
    std::printf("[%s] %2d. %-58s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
                seconds, detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures_total;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void run_suite_criterion(int number, const std::string& title, const std::string& suite) {
    SuiteResult r = run_suite(suite);
    std::string detail;
    if (!r.passed())
        detail = std::to_string(r.failures.size()) + " failures, first: " + r.failures[0].input;
    report(number, title + " [" + suite + ", " + std::to_string(r.cases) + " cases]", r.passed(),
           r.wall_seconds, detail);
}

// 1. exhaustive bijection A^n <-> pairs (P,Q) and the dimension count k^n
void criterion_bijectivity() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int k = 2; k <= 3 && ok; ++k)
        for (std::size_t n = 0; n <= 7 && ok; ++n) {
            std::set<std::pair<Tableau, Tableau>> seen;
            for (const Word& w : all_words(k, 0, n)) {
                RskPair pair = rsk(w);
                if (!is_semistandard(pair.p, k) || !is_standard(pair.q) ||
                    pair.p.shape() != pair.q.shape() ||
                    !(inverse_rsk(pair, InsertionVariant::plain, k, 0) == w)) {
                    ok = false;
                    detail = "bad pair for w=" + to_string(w);
                    break;
                }
                seen.insert({pair.p, pair.q});
            }
            // injectivity
            if (ok && seen.size() != all_words(k, 0, n).size()) {
                ok = false;
                detail = "collision at k=" + std::to_string(k) + " n=" + std::to_string(n);
            }
            // surjectivity: every (semistandard, standard) pair of equal shape is hit
            if (ok) {
                std::size_t pair_count = 0;
                Integer weighted = 0;
                for (const YoungDiagram& lambda : partitions_of(static_cast<int>(n), k)) {
                    auto fibers = enumerate_ssyt(lambda, k);
                    auto standards = enumerate_syt(lambda);
                    pair_count += fibers.size() * standards.size();
                    weighted += dim_hook(lambda) * count_ssyt(lambda, k);
                    for (const Tableau& p : fibers)
                        for (const Tableau& q : standards)
                            if (!seen.count({p, q})) {
                                ok = false;
                                detail = "unreached pair P=" + to_string(p) + " Q=" + to_string(q);
                            }
                }
                Integer power = 1;
                for (std::size_t i = 0; i < n; ++i) power *= k;
                if (ok && (pair_count != seen.size() || weighted != power)) {
                    ok = false;
                    detail = "count identity broken at k=" + std::to_string(k) +
                             " n=" + std::to_string(n);
                }
            }
        }
    report(1, "RSK bijectivity and Schur-Weyl count (k<=3, n<=7)", ok, seconds_since(start),
           detail);
}

// 9. exact dimension ratio vs its first-order product form along a trajectory
void criterion_dim_ratio_asymptotics() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    BernoulliSpec spec = BernoulliSpec::pure({parse_rational("0.7"), parse_rational("0.3")}, 1);
    Word w = sample_word(spec, 10000);
    YoungDiagram lambda = youngize(w).p.shape();
    double worst = 0;
    for (int m = 0; m <= 3; ++m)
        for (const Word& a : all_words(2, 0, m)) {
            double exact = dim_ratio(lambda, a).get_d();
            double asymp = dim_ratio_asymp(lambda, a, {0.7, 0.3});
            if (asymp == 0) {
                if (exact != 0) {
                    ok = false;
                    detail = "zero mismatch at a=" + to_string(a);
                }
                continue;
            }
            worst = std::max(worst, std::abs(exact / asymp - 1));
        }
    if (worst > 0.05) {
        ok = false;
        detail = "relative error " + std::to_string(worst);
    }
    report(9, "dimension-ratio asymptotics (n=10^4, m<=3, rel err <= 0.05)", ok,
           seconds_since(start), detail);
}

// 11. graph structure: SW_2 codes, degrees, path counts, maximal subgraph
void criterion_graph_structure() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& why) {
        if (ok) detail = why;
        ok = false;
    };

    GradedGraph g = build_graph(2, 0, 8);
    std::vector<Integer> counts{1};
    for (int n = 0; n <= 8; ++n) {
        // vertex <-> code bijection
        std::set<std::pair<std::vector<long long>, long long>> codes;
        for (const Tableau& t : g.levels[n]) {
            Sw2Code code = encode_sw2(t);
            if (!(decode_sw2(code) == t)) fail("decode(encode) != id at level " + std::to_string(n));
            if (code.r < 0 || code.r > code.shape.row(1) - code.shape.row(2))
                fail("r out of interval");
            codes.insert({code.shape.rows(), code.r});
        }
        if (codes.size() != g.levels[n].size()) fail("codes not injective");
        long long expected = 0;
        for (const YoungDiagram& lambda : partitions_of(n, 2))
            expected += lambda.row(1) - lambda.row(2) + 1;
        if (static_cast<long long>(g.levels[n].size()) != expected) fail("level size != code count");

        // path counts = dimensions
        for (std::size_t i = 0; i < g.levels[n].size(); ++i)
            if (counts[i] != dim_hook(g.levels[n][i].shape())) fail("path count != dim");
        if (n < 8) {
            // out-degree k and edge-set isomorphism with the code successor rule
            std::map<int, std::set<std::pair<std::vector<long long>, long long>>> succ;
            for (const GraphEdge& e : g.edges[n]) {
                Sw2Code to = encode_sw2(g.levels[n + 1][e.target]);
                succ[e.source].insert({to.shape.rows(), to.r});
            }
            std::map<int, int> outdeg;
            for (const GraphEdge& e : g.edges[n]) ++outdeg[e.source];
            for (std::size_t i = 0; i < g.levels[n].size(); ++i) {
                if (outdeg[static_cast<int>(i)] != 2) fail("out-degree != 2");
                Sw2Code from = encode_sw2(g.levels[n][i]);
                std::set<std::pair<std::vector<long long>, long long>> predicted;
                for (const Sw2Code& s : sw2_successors(from))
                    predicted.insert({s.shape.rows(), s.r});
                if (succ[static_cast<int>(i)] != predicted) fail("edge sets differ on codes");
            }
            std::vector<Integer> next(g.levels[n + 1].size(), 0);
            for (const GraphEdge& e : g.edges[n]) next[e.target] += counts[e.source];
            counts = std::move(next);
        }
    }

    // out-degree 3 for a three-letter alphabet
    GradedGraph g3 = build_graph(3, 0, 5);
    for (int n = 0; n < 5; ++n) {
        std::map<int, int> outdeg;
        for (const GraphEdge& e : g3.edges[n]) ++outdeg[e.source];
        for (std::size_t i = 0; i < g3.levels[n].size(); ++i)
            if (outdeg[static_cast<int>(i)] != 3) fail("out-degree != 3");
    }

    // the maximal-tableau subgraph is a copy of the Young graph (k = 2, up to level 7)
    for (int n = 0; n <= 6; ++n)
        for (const YoungDiagram& lambda : partitions_of(n, 2)) {
            Tableau s_lambda = maximal_tableau(lambda, 2, 0);
            int edges_up = 0;
            for (int v = 1; v <= 2; ++v) {
                Tableau grown = insert_row(s_lambda, Symbol::row(v)).first;
                YoungDiagram mu = grown.shape();
                bool is_maximal = grown == maximal_tableau(mu, 2, 0);
                if (is_maximal) ++edges_up;
            }
            long long covers = 0;
            for (CellPosition c : lambda.addable_cells())
                if (c.row <= 2) ++covers;
            if (edges_up != covers) fail("maximal subgraph misses a cover of " + to_string(lambda));
        }

    report(11, "SW_2 codes, degrees, path counts, maximal subgraph (<=8)", ok,
           seconds_since(start), detail);
}

}  // namespace

int main() {
    std::printf("acceptance checks\n");
    criterion_bijectivity();
    run_suite_criterion(2, "duality identity, exhaustive n<=6, k<=3", "duality");
    run_suite_criterion(3, "prefix counts: schedule formula vs enumeration", "focus");
    run_suite_criterion(4, "psi identity and schedule shapes, n<=6, k<=3", "shape");
    run_suite_criterion(5, "Vandermonde convolution, 100 random instances", "vandermonde");
    run_suite_criterion(6, "dimension triple agreement, |lambda|<=12", "dims");
    run_suite_criterion(7, "row/column densities at n=10^5 (tol 0.015)", "densities");
    run_suite_criterion(8, "Thoma cylinder convergence at n=10^4 (tol 0.02)", "thoma");
    criterion_dim_ratio_asymptotics();
    run_suite_criterion(10, "mixed duality and Greene cross-check", "mixed-duality");
    criterion_graph_structure();

    if (failures_total == 0) {
        std::printf("all acceptance checks passed\n");
        return 0;
    }
    std::printf("%d acceptance check(s) failed\n", failures_total);
    return 1;
}
