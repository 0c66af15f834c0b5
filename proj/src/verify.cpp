#include "swg/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "swg/ergodic.hpp"
#include "swg/insertion.hpp"
#include "swg/rsk.hpp"
#include "swg/young.hpp"

namespace swg {

namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& input, const std::string& expected,
               const std::string& actual) {
        ++result_.cases;
        if (!ok) result_.failures.push_back({input, expected, actual});
    }

    void check_eq(bool ok, const std::string& input) { check(ok, input, "equal", "differs"); }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

SuiteResult suite_duality() {
    Suite suite("duality");
    for (int k = 1; k <= 3; ++k) {
        for (std::size_t n = 0; n <= 6; ++n) {
            for (const Word& w : all_words(k, 0, n)) {
                RskPair plain = rsk(w);
                RskPair star = rsk_star(reversed(w));
                suite.check(star.p == transpose(plain.p) &&
                                star.q == evacuation(transpose(plain.q)),
                            "k=" + std::to_string(k) + " w=" + to_string(w),
                            "RSK*(rev w) = (P^t, evac(Q^t))", "mismatch");
            }
        }
    }
    return suite.take();
}

SuiteResult suite_focus() {
    Suite suite("focus");
    // exhaustive: every semistandard T with |T| <= 5 over {1,2}, every prefix length
    for (int n = 1; n <= 5; ++n) {
        for (const YoungDiagram& lambda : partitions_of(n, 2)) {
            for (const Tableau& t : enumerate_ssyt(lambda, 2)) {
                for (int m = 0; m <= n; ++m) {
                    for (const Word& a : all_words(2, 0, m)) {
                        Integer lhs = c_a_formula(t, a);
                        Integer rhs = c_a_bruteforce(t, a, 2);
                        suite.check(lhs == rhs, "T=" + to_string(t) + " a=" + to_string(a),
                                    rhs.get_str(), lhs.get_str());
                    }
                }
            }
        }
    }
    // randomized: 500 cases at k=3, |T| <= 6
    std::mt19937_64 eng(20240711);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + eng() % 6;
        std::vector<int> letters(n);
        for (auto& v : letters) v = 1 + static_cast<int>(eng() % 3);
        Tableau t = rsk(Word::of_rows(letters, 3)).p;
        std::size_t m = eng() % (n + 1);
        std::vector<int> prefix(m);
        for (auto& v : prefix) v = 1 + static_cast<int>(eng() % 3);
        Word a = Word::of_rows(prefix, 3);
        Integer lhs = c_a_formula(t, a);
        Integer rhs = c_a_bruteforce(t, a, 3);
        suite.check(lhs == rhs, "T=" + to_string(t) + " a=" + to_string(a), rhs.get_str(),
                    lhs.get_str());
    }
    return suite.take();
}

SuiteResult suite_shape() {
    Suite suite("shape");
    for (int k = 1; k <= 3; ++k)
        for (std::size_t n = 0; n <= 6; ++n)
            for (const Word& u : all_words(k, 0, n)) {
                Word lhs = reversed(psi(u));
                Word rhs = reversed(u);
                suite.check(rsk(lhs).q == rsk(rhs).q, "k=" + std::to_string(k) + " u=" + to_string(u),
                            "Q(rev(psi u)) = Q(rev u)", "mismatch");
            }
    for (int n = 1; n <= 6; ++n)
        for (const YoungDiagram& lambda : partitions_of(n, 3))
            for (const Tableau& t : enumerate_ssyt(lambda, 3))
                for (int m = 0; m <= n; ++m)
                    for (const SkewDecreasingFilling& s : skew_fillings(lambda, m)) {
                        Word a = phi(t, s);
                        suite.check(word_shape(word_of_filling(s)) == word_shape(a),
                                    "T=" + to_string(t) + " S-cells via a=" + to_string(a),
                                    "sh(w_S) = sh(a)", "mismatch");
                    }
    return suite.take();
}

SuiteResult suite_vandermonde() {
    Suite suite("vandermonde");
    std::mt19937_64 eng(411);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + eng() % 4;  // 2..5 variables
        std::vector<Rational> x(n);
        for (auto& v : x) {
            v = Rational(static_cast<long>(eng() % 41) - 20, 1 + static_cast<long>(eng() % 6));
            v.canonicalize();
        }
        int mu_size = static_cast<int>(eng() % 7);
        auto shapes = partitions_of(mu_size, static_cast<int>(n));
        YoungDiagram mu = shapes[eng() % shapes.size()];
        Rational lhs = vandermonde_mu(x, mu);
        Rational rhs = Rational(perm_count(mu, n)) * vandermonde(x);
        suite.check(lhs == rhs, "x size " + std::to_string(n) + " mu=" + to_string(mu),
                    to_string(rhs), to_string(lhs));
    }
    return suite.take();
}

SuiteResult suite_dims() {
    Suite suite("dims");
    for (int n = 0; n <= 12; ++n)
        for (const YoungDiagram& lambda : partitions_of(n)) {
            Integer paths = dim_paths(lambda);
            Integer hook = dim_hook(lambda);
            Integer frob = dim_frobenius(lambda);
            suite.check(paths == hook && hook == frob, "lambda=" + to_string(lambda),
                        paths.get_str(),
                        hook.get_str() + "/" + frob.get_str());
        }
    return suite.take();
}

SuiteResult suite_densities() {
    Suite suite("densities");
    const std::vector<std::uint64_t> seeds = {1, 2, 3};
    {
        BernoulliSpec spec = BernoulliSpec::pure(
            {Rational(1, 2), Rational(3, 10), Rational(1, 5)}, 0);
        DensityReport rep = check_density_theorem(spec, 100000, seeds, 0.015);
        for (const auto& r : rep.per_seed)
            suite.check(r.max_row_deviation <= rep.tolerance,
                        "pure seed " + std::to_string(r.seed), "max row dev <= 0.015",
                        std::to_string(r.max_row_deviation));
    }
    {
        BernoulliSpec spec(2, 2, {Rational(2, 5), Rational(1, 5)},
                           {Rational(3, 10), Rational(1, 10)}, 0);
        DensityReport rep = check_density_theorem(spec, 100000, seeds, 0.015);
        for (const auto& r : rep.per_seed) {
            suite.check(r.max_row_deviation <= rep.tolerance,
                        "mixed seed " + std::to_string(r.seed), "max row dev <= 0.015",
                        std::to_string(r.max_row_deviation));
            suite.check(r.max_col_deviation <= rep.tolerance,
                        "mixed seed " + std::to_string(r.seed), "max col dev <= 0.015",
                        std::to_string(r.max_col_deviation));
        }
    }
    return suite.take();
}

SuiteResult suite_thoma() {
    Suite suite("thoma");
    const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    {
        BernoulliSpec spec = BernoulliSpec::pure({Rational(7, 10), Rational(3, 10)}, 0);
        ThomaReport rep = check_thoma(spec, 10000, 3, seeds, 0.02);
        for (const auto& s : rep.shapes)
            suite.check(s.deviation <= rep.tolerance,
                        "p=(0.7,0.3) shape=" + to_string(s.shape),
                        "deviation <= 0.02", std::to_string(s.deviation));
    }
    {
        EqualDensityReport rep = check_equal_density_case(2, 10000, 3, seeds, 0.02);
        suite.check(rep.identity_ok, "d_lambda(k)/k^m = s_lambda(1/k,...)", "exact equality",
                    rep.identity_ok ? "ok" : "violated");
        for (const auto& s : rep.monte_carlo.shapes)
            suite.check(s.deviation <= rep.monte_carlo.tolerance,
                        "uniform shape=" + to_string(s.shape), "deviation <= 0.02",
                        std::to_string(s.deviation));
    }
    return suite.take();
}

SuiteResult suite_mixed_duality() {
    Suite suite("mixed-duality");
    for (std::size_t n = 0; n <= 6; ++n)
        for (const Word& w : all_words(2, 2, n)) {
            RskPair forward = rsk_mixed(w);
            RskPair flipped = rsk_mixed(dagger(w));
            suite.check(flipped.q == transpose(forward.q), "w=" + to_string(w),
                        "Q(dagger w) = Q(w)^t", "mismatch");
        }
    std::mt19937_64 eng(5151);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + eng() % 10;
        std::vector<Symbol> syms;
        for (std::size_t i = 0; i < n; ++i) {
            int v = 1 + static_cast<int>(eng() % 2);
            syms.push_back(eng() % 2 ? Symbol::row(v) : Symbol::column(v));
        }
        Word w(std::move(syms), 2, 2);
        YoungDiagram sh = word_shape(w);
        auto incr = greene_increasing(w, 1);
        auto decr = greene_decreasing(w, 1);
        suite.check(incr[0] == sh.row(1), "w=" + to_string(w),
                    std::to_string(sh.row(1)), std::to_string(incr[0]));
        suite.check(decr[0] == sh.col(1), "w=" + to_string(w),
                    std::to_string(sh.col(1)), std::to_string(decr[0]));
    }
    return suite.take();
}

using SuiteFn = SuiteResult (*)();

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> table = {
        {"duality", suite_duality},   {"focus", suite_focus},
        {"shape", suite_shape},       {"vandermonde", suite_vandermonde},
        {"dims", suite_dims},         {"densities", suite_densities},
        {"thoma", suite_thoma},       {"mixed-duality", suite_mixed_duality},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_table()) names.push_back(name);
    return names;
}

SuiteResult run_suite(const std::string& name) {
    auto it = suite_table().find(name);
    if (it == suite_table().end()) throw std::invalid_argument("unknown suite: " + name);
    auto start = std::chrono::steady_clock::now();
    SuiteResult result = it->second();
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<SuiteResult> run_all_suites() {
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(run_suite(name));
    return out;
}

}  // namespace swg
