#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swg/numeric.hpp"
#include "swg/tableau.hpp"
#include "swg/word.hpp"
#include "swg/young.hpp"

namespace swg {

// Reported with every experiment so runs replay bit-exactly: one mt19937_64
// engine per trial, seeded by one splitmix64 step of the trial seed.
inline constexpr const char* kRngAlgorithm = "mt19937_64/splitmix64-seeded";

std::uint64_t splitmix64(std::uint64_t& state);

struct BernoulliSpec {
    int k = 0;
    int l = 0;
    std::vector<Rational> p;  // row symbol probabilities, size k
    std::vector<Rational> q;  // column symbol probabilities, size l
    std::uint64_t seed = 0;

    BernoulliSpec(int k, int l, std::vector<Rational> p, std::vector<Rational> q,
                  std::uint64_t seed);
    static BernoulliSpec pure(std::vector<Rational> p, std::uint64_t seed);
    static BernoulliSpec uniform(int k, std::uint64_t seed);

    BernoulliSpec with_seed(std::uint64_t s) const;
};

// i.i.d. word of length n; deterministic in (spec.seed, n).
Word sample_word(const BernoulliSpec& spec, std::size_t n);

struct TrajectorySnapshot {
    std::size_t step = 0;
    std::vector<long long> row_lengths;
    std::vector<long long> col_lengths;  // first l columns only
};

struct TrajectoryStats {
    std::size_t n = 0;
    std::vector<long long> row_symbol_counts;  // occurrences of 1..k
    std::vector<long long> col_symbol_counts;  // occurrences of 1*..l*
    Tableau p;                                 // final P tableau
    std::vector<CellPosition> q_growth;        // cell added at each step
    std::vector<TrajectorySnapshot> snapshots;
};

// Incremental insertion along the word; one amortized insertion per step.
TrajectoryStats youngize(const Word& w, std::size_t log_every = 0);

// Iterated bracketing of 21-factors in a binary word; pair count = lambda_2.
struct Bracketing {
    std::vector<std::size_t> free_positions;                 // 1-based
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (pos of 2, pos of 1)
};
Bracketing free_paired(const Word& w);

struct CylinderEstimate {
    Word a;
    YoungDiagram shape;  // sh(a)
    Rational estimate;   // mu_x^(n)(C_a)
};

struct EstimateReport {
    std::size_t n = 0;
    int m = 0;
    int k = 0;
    int l = 0;
    YoungDiagram lambda_n;
    std::vector<CylinderEstimate> cylinders;  // every a in A^m, lexicographic

    Rational total() const;  // always exactly 1
};

// mu_x^(n)(C_a) = c_a(P([w]_n)) / dim(sh), exactly, for all a of length m,
// via the deletion-schedule decomposition (never by plactic enumeration).
EstimateReport tail_estimate(const Word& w, std::size_t n, int m);
EstimateReport tail_estimate(const Tableau& p_tableau, int m, int k, int l);

Rational shape_cylinder_sum(const EstimateReport& report, const YoungDiagram& lambda);

struct DensitySeedResult {
    std::uint64_t seed = 0;
    std::vector<double> row_normalized;  // lambda_j / n, j = 1..k
    std::vector<double> col_normalized;  // lambda'_j / n, j = 1..l
    double max_row_deviation = 0;
    double max_col_deviation = 0;
};

struct DensityReport {
    std::size_t n = 0;
    double tolerance = 0;
    std::vector<double> p_hat;  // sorted densities
    std::vector<double> q_hat;
    std::vector<DensitySeedResult> per_seed;
    bool passed = false;
};

DensityReport check_density_theorem(const BernoulliSpec& spec, std::size_t n,
                                    const std::vector<std::uint64_t>& seeds, double tolerance);

struct ThomaShapeResult {
    YoungDiagram shape;
    Rational reference;  // dim(shape) * s_shape(p), hook variant in mixed mode
    std::vector<Rational> per_seed;
    double seed_average = 0;
    double deviation = 0;
};

struct ThomaReport {
    std::size_t n = 0;
    int m = 0;
    double tolerance = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<ThomaShapeResult> shapes;  // all |shape| in 1..m
    bool passed = false;
};

// Seed-averaged shape-cylinder sums against the Thoma cylinder values, for
// every shape of size 1..m. `words` overrides sampling (replay).
ThomaReport check_thoma(const BernoulliSpec& spec, std::size_t n, int m,
                        const std::vector<std::uint64_t>& seeds, double tolerance,
                        const std::vector<Word>* words = nullptr);

struct EqualDensityReport {
    ThomaReport monte_carlo;
    bool identity_ok = false;  // d_lambda(k)/k^|lambda| == s_lambda(1/k,...,1/k), |lambda| <= 6
    bool passed = false;
};

EqualDensityReport check_equal_density_case(int k, std::size_t n, int m,
                                            const std::vector<std::uint64_t>& seeds,
                                            double tolerance);

// Central-measure path on Y_k (transition weight s_mu(p)/s_lambda(p)),
// exact rational thresholds; p uniform uses the tableau-count form.
std::vector<YoungDiagram> sample_central_path(const std::vector<Rational>& p, std::size_t n,
                                              std::uint64_t seed);

struct DegenerateReport {
    std::size_t n = 0;
    Word maximal_word;                                    // word of the maximal-tableau path
    std::vector<std::pair<Word, Rational>> maximal_m1;    // estimates on the degenerate path
    std::vector<std::pair<Word, Rational>> bernoulli_m2;  // estimates on a Bernoulli path
    bool degenerate_has_zero = false;     // some cylinder gets exactly 0
    bool nondegenerate_all_positive = false;
};

DegenerateReport degenerate_measure_demo(int k, std::size_t n, std::uint64_t seed);

// Experiment front end shared by the CLI and the test suites.
struct ExperimentConfig {
    std::string mode = "pure";  // pure | mixed | uniform
    int k = 0;
    int l = 0;
    std::vector<Rational> p;
    std::vector<Rational> q;
    std::size_t n = 0;
    int m = 0;
    std::vector<std::uint64_t> seeds;
    std::size_t log_every = 0;
    double tolerance_density = 0.015;
    double tolerance_thoma = 0.02;

    BernoulliSpec spec() const;
};

ExperimentConfig parse_experiment_config(const std::string& json_text);

struct ExperimentResult {
    std::string report_json;
    std::string report_csv;
    std::vector<Word> words;  // the sampled (or replayed) trajectories, per seed
    bool passed = false;
};

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::vector<Word>* resume_words = nullptr);

}  // namespace swg
