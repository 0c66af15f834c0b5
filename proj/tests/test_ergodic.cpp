#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "swg/ergodic.hpp"
#include "swg/graph.hpp"
#include "swg/rsk.hpp"
#include "swg/young.hpp"

using namespace swg;

namespace {

Rational rat(const char* text) { return parse_rational(text); }

BernoulliSpec spec_07_03(std::uint64_t seed) {
    return BernoulliSpec::pure({rat("0.7"), rat("0.3")}, seed);
}

}  // namespace

TEST_CASE("bernoulli sampling") {
    CHECK_THROWS(BernoulliSpec::pure({rat("0.5"), rat("0.4")}, 0));  // mass != 1
    CHECK_THROWS(BernoulliSpec(1, 0, {rat("1")}, {rat("0")}, 0));    // q size vs l

    // degenerate distribution: every symbol is 1
    Word all_ones = sample_word(BernoulliSpec::pure({rat("1"), rat("0")}, 3), 64);
    for (Symbol s : all_ones.symbols()) CHECK(s == Symbol::row(1));

    // determinism in the seed
    CHECK(sample_word(spec_07_03(5), 100) == sample_word(spec_07_03(5), 100));
    CHECK(!(sample_word(spec_07_03(5), 100) == sample_word(spec_07_03(6), 100)));

    // empirical frequency within 3 standard errors, per fixed seed
    const std::size_t n = 100000;
    for (std::uint64_t seed : {1, 2, 3}) {
        Word w = sample_word(spec_07_03(seed), n);
        long long ones = 0;
        for (Symbol s : w.symbols())
            if (s == Symbol::row(1)) ++ones;
        double freq = static_cast<double>(ones) / static_cast<double>(n);
        CHECK(std::abs(freq - 0.7) <= 3 * std::sqrt(0.7 * 0.3 / static_cast<double>(n)));
    }

    // mixed alphabet: starred symbols appear with the q masses
    BernoulliSpec mixed(1, 1, {rat("0.5")}, {rat("0.5")}, 9);
    Word wm = sample_word(mixed, 10000);
    long long starred = 0;
    for (Symbol s : wm.symbols())
        if (s.starred()) ++starred;
    CHECK(std::abs(starred / 10000.0 - 0.5) < 0.02);
}

TEST_CASE("youngize matches whole-word insertion and tracks growth") {
    Word constant = Word::of_rows(std::vector<int>(50, 1), 2);
    TrajectoryStats stats = youngize(constant);
    CHECK(stats.p.shape() == parse_diagram("50"));

    CHECK(youngize(Word::of_rows({2, 1, 2}, 2)).p.shape() == parse_diagram("2,1"));

    for (const Word& w : all_words(2, 1, 5)) {
        TrajectoryStats st = youngize(w);
        RskPair pair = rsk_mixed(w);
        CHECK(st.p == pair.p);
        CHECK(standard_from_growth(st.q_growth) == pair.q);  // Q_n extends Q_{n-1}
    }

    // snapshots at the logging cadence
    TrajectoryStats st = youngize(Word::of_rows(std::vector<int>(10, 1), 1), 4);
    REQUIRE(st.snapshots.size() == 3);
    CHECK(st.snapshots[0].step == 4);
    CHECK(st.snapshots[1].step == 8);
    CHECK(st.snapshots[2].step == 10);
    CHECK(st.snapshots[0].row_lengths == std::vector<long long>{4});

    // symbol counts
    TrajectoryStats sm = youngize(parse_word("1,2*,1,1*", 2, 2));
    CHECK(sm.row_symbol_counts == std::vector<long long>{2, 0});
    CHECK(sm.col_symbol_counts == std::vector<long long>{1, 1});
}

TEST_CASE("free and paired coordinates") {
    Bracketing b1 = free_paired(Word::of_rows({1, 1, 2}, 2));
    CHECK(b1.pairs.empty());
    CHECK(b1.free_positions == std::vector<std::size_t>{1, 2, 3});

    Bracketing b2 = free_paired(Word::of_rows({2, 1, 2, 1}, 2));
    CHECK(b2.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {3, 4}});
    CHECK(b2.free_positions.empty());
    CHECK(word_shape(Word::of_rows({2, 1, 2, 1}, 2)) == parse_diagram("2,2"));

    CHECK_THROWS(free_paired(Word::of_rows({1, 3}, 3)));
    CHECK_THROWS(free_paired(parse_word("1*", 1, 1)));

    // pair count equals lambda_2 for every binary word up to n = 10
    for (std::size_t n = 0; n <= 10; ++n)
        for (const Word& w : all_words(2, 0, n)) {
            Bracketing b = free_paired(w);
            CHECK(static_cast<long long>(b.pairs.size()) == word_shape(w).row(2));
            CHECK(b.free_positions.size() + 2 * b.pairs.size() == n);
            // residual free subword reads 1^a 2^b
            bool seen_two = false;
            for (std::size_t pos : b.free_positions) {
                if (w.at(pos - 1) == Symbol::row(2)) seen_two = true;
                if (seen_two) CHECK(w.at(pos - 1) == Symbol::row(2));
            }
        }
}

TEST_CASE("tail estimates are exact probability vectors") {
    // m = 0: the single empty cylinder carries everything
    EstimateReport e0 = tail_estimate(Word::of_rows({2, 1, 2}, 2), 3, 0);
    REQUIRE(e0.cylinders.size() == 1);
    CHECK(e0.cylinders[0].estimate == 1);

    // constant word: the plactic class is a singleton
    Word constant = Word::of_rows(std::vector<int>(20, 1), 2);
    EstimateReport ec = tail_estimate(constant, 20, 2);
    for (const auto& c : ec.cylinders) {
        bool all_ones = true;
        for (Symbol s : c.a.symbols()) all_ones &= (s == Symbol::row(1));
        CHECK(c.estimate == (all_ones ? Rational(1) : Rational(0)));
    }

    for (const Word& w : all_words(2, 0, 6)) {
        for (int m = 0; m <= 3; ++m) {
            EstimateReport rep = tail_estimate(w, w.size(), m);
            CHECK(rep.total() == 1);
            for (const auto& c : rep.cylinders) {
                // exact agreement with the defining count c_a / dim
                Rational direct(c_a_formula(rsk(w).p, c.a), dim_hook(rep.lambda_n));
                direct.canonicalize();
                CHECK(c.estimate == direct);
            }
        }
    }

    // mixed alphabet: the same exactness through hook tableaux
    for (const Word& w : all_words(1, 1, 5)) {
        EstimateReport rep = tail_estimate(w, w.size(), 2);
        CHECK(rep.total() == 1);
        for (const auto& c : rep.cylinders) {
            Rational direct(c_a_formula(rsk_mixed(w).p, c.a), dim_hook(rep.lambda_n));
            direct.canonicalize();
            CHECK(c.estimate == direct);
        }
    }
}

TEST_CASE("shape sums agree between the schedule route and the row-deletion route") {
    for (const Word& w : all_words(2, 0, 6)) {
        Tableau t = rsk(w).p;
        YoungDiagram nu = t.shape();
        for (int m = 0; m <= 3; ++m) {
            EstimateReport rep = tail_estimate(t, m, 2, 0);
            std::map<std::vector<long long>, Rational> by_shape;
            for (const auto& s : skew_fillings(nu, m))
                by_shape[word_shape(word_of_filling(s)).rows()] += dim_ratio(nu, word_of_filling(s));
            for (const YoungDiagram& lambda : partitions_of(m))
                CHECK(shape_cylinder_sum(rep, lambda) ==
                      (by_shape.count(lambda.rows()) ? by_shape[lambda.rows()] : Rational(0)));
        }
    }
}

TEST_CASE("tail estimate converges to the Bernoulli mass") {
    Word w = sample_word(spec_07_03(1), 10000);
    EstimateReport rep = tail_estimate(w, 10000, 1);
    REQUIRE(rep.cylinders.size() == 2);
    CHECK(std::abs(rep.cylinders[0].estimate.get_d() - 0.7) <= 0.02);
    CHECK(std::abs(rep.cylinders[1].estimate.get_d() - 0.3) <= 0.02);
}

TEST_CASE("density check") {
    DensityReport one = check_density_theorem(BernoulliSpec::pure({rat("1")}, 0), 1000, {1}, 1e-12);
    CHECK(one.passed);
    CHECK(one.per_seed[0].row_normalized[0] == 1.0);

    DensityReport rep = check_density_theorem(spec_07_03(0), 20000, {1, 2, 3}, 0.02);
    CHECK(rep.passed);
}

TEST_CASE("monte carlo deviations shrink as n grows") {
    // median max-deviation over a fixed seed set, n vs 16n
    auto median_dev = [](std::size_t n) {
        std::vector<double> devs;
        DensityReport rep =
            check_density_theorem(spec_07_03(0), n, {11, 12, 13, 14, 15}, 1.0);
        for (const auto& r : rep.per_seed) devs.push_back(r.max_row_deviation);
        std::sort(devs.begin(), devs.end());
        return devs[devs.size() / 2];
    };
    CHECK(median_dev(16000) < median_dev(1000));
}

TEST_CASE("thoma check on a small run") {
    ThomaReport rep = check_thoma(spec_07_03(0), 4000, 2, {1, 2, 3}, 0.05);
    CHECK(rep.passed);
    // references are the Thoma cylinder values
    ThomaParams params = ThomaParams::pure({rat("0.7"), rat("0.3")});
    for (const auto& s : rep.shapes)
        CHECK(s.reference == thoma_cylinder(s.shape, params));

    EqualDensityReport eq = check_equal_density_case(2, 2000, 2, {1, 2}, 0.08);
    CHECK(eq.identity_ok);
}

TEST_CASE("central measure paths on the Young graph") {
    auto path = sample_central_path({rat("1/2"), rat("1/2")}, 30, 4);
    REQUIRE(path.size() == 31);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        CHECK(path[i + 1].size() == path[i].size() + 1);
        CHECK(path[i + 1].contains(path[i]));
        CHECK(path[i + 1].row_count() <= 2);
    }
    CHECK(sample_central_path({rat("1/2"), rat("1/2")}, 30, 4) == path);

    auto skewed = sample_central_path({rat("0.7"), rat("0.3")}, 25, 9);
    CHECK(skewed.back().size() == 25);
}

TEST_CASE("degenerate vs nondegenerate central measures") {
    DegenerateReport rep = degenerate_measure_demo(2, 60, 11);
    CHECK(rep.degenerate_has_zero);
    CHECK(rep.nondegenerate_all_positive);
    // k = 2: no word with a maximal P-tableau starts with 1
    REQUIRE(rep.maximal_m1.size() == 2);
    CHECK(rep.maximal_m1[0].first == Word::of_rows({1}, 2));
    CHECK(rep.maximal_m1[0].second == 0);
    CHECK(rep.maximal_m1[1].second == 1);

    // a single-row maximal path is fully forced: the word is 2,2,...,2
    std::vector<Tableau> tabs;
    for (int n = 0; n <= 3; ++n)
        tabs.push_back(maximal_tableau(YoungDiagram(std::vector<long long>(n > 0, n)), 2, 0));
    Word forced = path_to_word(tabs, 2, 0);
    CHECK(forced == Word::of_rows({2, 2, 2}, 2));
    for (int n = 1; n <= 3; ++n)
        CHECK(plactic_class(tabs[n]).size() == 1);
}

TEST_CASE("experiment config parsing") {
    const char* good = R"({"mode":"pure","k":2,"p":["0.7","0.3"],"n":100,"m":1,"seeds":[1,2]})";
    ExperimentConfig cfg = parse_experiment_config(good);
    CHECK(cfg.p[0] == rat("7/10"));
    CHECK(cfg.tolerance_thoma == 0.02);

    // JSON numbers are read through their decimal text, exactly
    ExperimentConfig cfg2 = parse_experiment_config(
        R"({"mode":"pure","k":2,"p":[0.7,0.3],"n":50,"m":0,"seeds":[7]})");
    CHECK(cfg2.p[0] == rat("7/10"));

    CHECK_THROWS(parse_experiment_config("not json"));
    CHECK_THROWS(parse_experiment_config(R"({"mode":"pure","k":2,"n":10,"seeds":[1]})"));
    CHECK_THROWS(parse_experiment_config(
        R"({"mode":"pure","k":2,"p":["0.5","0.4"],"n":10,"m":0,"seeds":[1]})"));
    CHECK_THROWS(parse_experiment_config(
        R"({"mode":"nope","k":2,"p":["0.5","0.5"],"n":10,"m":0,"seeds":[1]})"));
}

TEST_CASE("experiments are deterministic and replayable") {
    ExperimentConfig cfg = parse_experiment_config(
        R"({"mode":"pure","k":2,"p":["0.7","0.3"],"n":800,"m":2,"seeds":[1,2,3],
            "tolerance_density":0.2,"tolerance_thoma":0.2})");
    ExperimentResult first = run_experiment(cfg);
    ExperimentResult second = run_experiment(cfg);
    CHECK(first.report_json == second.report_json);
    CHECK(first.report_csv == second.report_csv);
    CHECK(first.passed);

    // resume from the logged words reproduces the estimates
    ExperimentResult replay = run_experiment(cfg, &first.words);
    CHECK(replay.report_csv == first.report_csv);

    CHECK(first.report_csv.rfind("seed,kind,key,estimate,reference,deviation\n", 0) == 0);
    CHECK(first.report_json.find("mt19937_64") != std::string::npos);

    ExperimentConfig uni = parse_experiment_config(
        R"({"mode":"uniform","k":2,"n":500,"m":2,"seeds":[4],
            "tolerance_density":0.3,"tolerance_thoma":0.3})");
    ExperimentResult ur = run_experiment(uni);
    CHECK(ur.report_json.find("identity_ok") != std::string::npos);

    ExperimentConfig mixed = parse_experiment_config(
        R"({"mode":"mixed","k":1,"l":1,"p":["0.6"],"q":["0.4"],"n":400,"m":2,"seeds":[5],
            "tolerance_density":0.3,"tolerance_thoma":0.3})");
    ExperimentResult mr = run_experiment(mixed);
    CHECK(mr.passed);
}
