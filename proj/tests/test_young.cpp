#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "swg/ergodic.hpp"
#include "swg/rsk.hpp"
#include "swg/young.hpp"

using namespace swg;

namespace {

YoungDiagram dia(const char* text) { return parse_diagram(text); }

Rational rat(const char* text) { return parse_rational(text); }

}  // namespace

TEST_CASE("dimensions: examples and the SYT enumeration oracle") {
    CHECK(dim_paths(YoungDiagram()) == 1);
    CHECK(dim_hook(dia("6")) == 1);
    CHECK(dim_paths(dia("2,1")) == 2);
    CHECK(dim_hook(dia("3,2")) == 5);
    for (int n = 0; n <= 8; ++n)
        for (const YoungDiagram& lambda : partitions_of(n)) {
            Integer enumerated(static_cast<long>(enumerate_syt(lambda).size()));
            CHECK(dim_paths(lambda) == enumerated);
            CHECK(dim_hook(lambda) == enumerated);
            CHECK(dim_frobenius(lambda) == enumerated);
        }
}

TEST_CASE("skew dimensions") {
    CHECK(skew_dim(dia("2,1"), dia("2,1")) == 1);
    CHECK(skew_dim(dia("1"), dia("2,1")) == 2);
    CHECK_THROWS(skew_dim(dia("2,2"), dia("3,1")));
    for (int n = 0; n <= 6; ++n)
        for (const YoungDiagram& lambda : partitions_of(n)) {
            CHECK(skew_dim(YoungDiagram(), lambda) == dim_hook(lambda));
            // number of deletion schedules from lambda down to mu equals the
            // number of standard fillings of the skew shape
            for (int m = 0; m <= n; ++m) {
                std::map<std::vector<long long>, long> schedule_count;
                for (const auto& s : skew_fillings(lambda, m)) ++schedule_count[s.inner().rows()];
                for (const auto& [inner_rows, count] : schedule_count)
                    CHECK(skew_dim(YoungDiagram(inner_rows), lambda) == Integer(count));
            }
        }
}

TEST_CASE("ssyt counts") {
    CHECK(count_ssyt(dia("1"), 5) == 5);
    CHECK(count_ssyt(dia("2"), 2) == 3);
    CHECK(count_ssyt(dia("1,1"), 2) == 1);
    CHECK(count_ssyt(dia("1,1,1"), 2) == 0);
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 6; ++n)
            for (const YoungDiagram& lambda : partitions_of(n)) {
                auto listed = enumerate_ssyt(lambda, k);
                CHECK(count_ssyt(lambda, k) == Integer(static_cast<long>(listed.size())));
                for (const Tableau& t : listed) CHECK(is_semistandard(t, k));
            }
    // Schur-Weyl count: sum over lambda of dim * d_lambda(k) = k^n
    for (int k = 2; k <= 3; ++k)
        for (int n = 0; n <= 6; ++n) {
            Integer total = 0;
            for (const YoungDiagram& lambda : partitions_of(n, k))
                total += dim_hook(lambda) * count_ssyt(lambda, k);
            Integer expected = 1;
            for (int i = 0; i < n; ++i) expected *= k;
            CHECK(total == expected);
        }
}

TEST_CASE("schur values") {
    CHECK(schur(dia("1"), {rat("1/2"), rat("1/2")}) == 1);
    CHECK(schur(dia("2"), {rat("1/2"), rat("1/2")}) == rat("3/4"));
    CHECK(schur(dia("1,1"), {rat("1/2"), rat("1/2")}) == rat("1/4"));
    CHECK(schur(dia("1,1,1"), {rat("1/2"), rat("1/2")}) == 0);

    std::mt19937_64 eng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t k = 2 + eng() % 2;
        std::vector<Rational> p(k);
        for (auto& x : p) {
            x = Rational(1 + static_cast<long>(eng() % 9), 10);
            x.canonicalize();
        }
        auto shapes = partitions_of(static_cast<int>(1 + eng() % 5));
        YoungDiagram lambda = shapes[eng() % shapes.size()];
        Rational reference = schur(lambda, p);
        // symmetry under permutations of the variables
        std::vector<Rational> shuffled = p;
        std::shuffle(shuffled.begin(), shuffled.end(), eng);
        CHECK(schur(lambda, shuffled) == reference);
        // bialternant route agrees whenever the values are distinct
        bool distinct = true;
        for (std::size_t i = 0; i < k && distinct; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (p[i] == p[j]) distinct = false;
        if (distinct) CHECK(schur_alternant(lambda, p) == reference);
    }

    // s_lambda(1/k,...,1/k) = d_lambda(k) / k^|lambda|
    for (int k = 2; k <= 3; ++k)
        for (int n = 0; n <= 6; ++n)
            for (const YoungDiagram& lambda : partitions_of(n, k)) {
                Integer power = 1;
                for (int i = 0; i < n; ++i) power *= k;
                Rational expected(count_ssyt(lambda, k), power);
                expected.canonicalize();
                CHECK(schur(lambda, std::vector<Rational>(k, Rational(1, k))) == expected);
            }
}

TEST_CASE("hook schur values") {
    ThomaParams params({rat("0.4"), rat("0.2")}, {rat("0.3"), rat("0.1")});
    CHECK(hook_schur(dia("1"), params) == 1);

    // beta = 0 reduces to the ordinary Schur polynomial
    ThomaParams pure = ThomaParams::pure({rat("0.6"), rat("0.4")});
    for (int n = 0; n <= 5; ++n)
        for (const YoungDiagram& lambda : partitions_of(n))
            CHECK(hook_schur(lambda, pure) == schur(lambda, pure.alpha));

    // k = 0: a column counts the same fillings as the conjugate row over beta
    ThomaParams cols({}, {rat("0.7"), rat("0.3")});
    for (int r = 1; r <= 5; ++r) {
        YoungDiagram column(std::vector<long long>(r, 1));
        CHECK(hook_schur(column, cols) == schur(column.conjugate(), cols.beta));
    }

    // does not fit the (k,l) hook -> 0
    CHECK(hook_schur(dia("2,2,2"), ThomaParams({rat("0.5")}, {rat("0.5")})) == 0);

    CHECK_THROWS(ThomaParams({rat("0.5")}, {rat("0.4")}));          // mass != 1
    CHECK_THROWS(ThomaParams({rat("0.2"), rat("0.8")}, {}));        // not sorted
}

TEST_CASE("thoma cylinder measures") {
    ThomaParams half = ThomaParams::pure({rat("1/2"), rat("1/2")});
    CHECK(thoma_cylinder(dia("1"), half) == 1);
    CHECK(thoma_cylinder(dia("2"), half) == rat("3/4"));
    CHECK(thoma_cylinder(dia("1,1"), half) == rat("1/4"));

    ThomaParams skew = ThomaParams::pure({rat("0.7"), rat("0.3")});
    Rational level3 = 0;
    for (const YoungDiagram& lambda : partitions_of(3)) level3 += thoma_cylinder(lambda, skew);
    CHECK(level3 == 1);

    ThomaParams mixed({rat("0.4"), rat("0.2")}, {rat("0.3"), rat("0.1")});
    for (int n = 0; n <= 6; ++n) {
        Rational total = 0;
        for (const YoungDiagram& lambda : partitions_of(n)) {
            total += thoma_cylinder(lambda, half);
        }
        CHECK(total == 1);
        total = 0;
        for (const YoungDiagram& lambda : partitions_of(n)) total += thoma_cylinder(lambda, mixed);
        CHECK(total == 1);
    }
}

TEST_CASE("dim ratio: exact form") {
    CHECK(dim_ratio(dia("5,2"), Word::of_rows({}, 2)) == 1);
    // deleting from row 1 of a square shape breaks monotonicity
    YoungDiagram square({50, 50});
    CHECK(dim_ratio(square, Word::of_rows({1}, 2)) == 0);
    CHECK(dim_ratio_asymp(square, Word::of_rows({1}, 2), {0.5, 0.5}) == 0);
    CHECK(dim_ratio(square, Word::of_rows({3}, 3)) == 0);  // row does not exist

    // against the direct dimension quotient
    for (int n = 1; n <= 7; ++n)
        for (const YoungDiagram& lambda : partitions_of(n, 3))
            for (const Word& a : all_words(3, 0, 2)) {
                std::vector<long long> rows(3, 0);
                for (std::size_t i = 0; i < lambda.row_count(); ++i) rows[i] = lambda.rows()[i];
                for (Symbol s : a.symbols()) rows[s.value() - 1] -= 1;
                bool valid = rows[0] >= rows[1] && rows[1] >= rows[2] && rows[2] >= 0;
                Rational expected = 0;
                if (valid) {
                    expected = Rational(dim_hook(YoungDiagram(rows)), dim_hook(lambda));
                    expected.canonicalize();
                }
                CHECK(dim_ratio(lambda, a) == expected);
            }
}

TEST_CASE("contained dim ratio equals the dimension quotient") {
    for (int n = 1; n <= 7; ++n)
        for (const YoungDiagram& outer : partitions_of(n))
            for (int m = 0; m <= 3 && m <= n; ++m)
                for (const auto& s : skew_fillings(outer, m)) {
                    Rational expected(dim_hook(s.inner()), dim_hook(outer));
                    expected.canonicalize();
                    CHECK(contained_dim_ratio(outer, s.inner()) == expected);
                }
}

TEST_CASE("dim ratio: asymptotic form near a typical trajectory") {
    // n = 10^4, p = (0.7, 0.3), every prefix word with m <= 3; fixed seed with
    // a typical trajectory (the m=3 comparison is sensitive to the sampled
    // density fluctuation, so the trial seed is part of the suite config)
    BernoulliSpec spec = BernoulliSpec::pure({rat("0.7"), rat("0.3")}, 1);
    Word w = sample_word(spec, 10000);
    YoungDiagram lambda = youngize(w).p.shape();
    for (int m = 0; m <= 3; ++m)
        for (const Word& a : all_words(2, 0, m)) {
            double exact = dim_ratio(lambda, a).get_d();
            double asymp = dim_ratio_asymp(lambda, a, {0.7, 0.3});
            if (asymp == 0) {
                CHECK(exact == 0);
            } else {
                CHECK(std::abs(exact / asymp - 1) <= 0.05);
            }
        }
}

TEST_CASE("vandermonde convolution") {
    CHECK(vandermonde({rat("3"), rat("1")}) == 2);
    CHECK(vandermonde_mu({rat("3"), rat("1")}, YoungDiagram()) == 2);
    CHECK(perm_count(YoungDiagram(), 2) == 1);
    // x = (3,1), mu = (1,0): delta(2,1) + delta(3,0) = 4 = 2 * delta(3,1)
    CHECK(vandermonde_mu({rat("3"), rat("1")}, dia("1")) == 4);
    CHECK(perm_count(dia("1"), 2) == 2);

    std::mt19937_64 eng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + eng() % 4;
        std::vector<Rational> x(n);
        for (auto& v : x) {
            v = Rational(static_cast<long>(eng() % 61) - 30, 1 + static_cast<long>(eng() % 7));
            v.canonicalize();
        }
        auto shapes = partitions_of(static_cast<int>(eng() % 8), static_cast<int>(n));
        const YoungDiagram& mu = shapes[eng() % shapes.size()];
        CHECK(vandermonde_mu(x, mu) == Rational(perm_count(mu, n)) * vandermonde(x));
    }
}
