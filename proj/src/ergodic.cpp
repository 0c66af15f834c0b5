#include "swg/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>

#include "swg/graph.hpp"
#include "swg/insertion.hpp"
#include "swg/rsk.hpp"

#include <json.hpp>

namespace swg {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::mt19937_64 make_engine(std::uint64_t seed) {
    std::uint64_t state = seed;
    return std::mt19937_64(splitmix64(state));
}

// floor(q * 2^64) for q in [0,1], as the u64 threshold of a raw draw.
std::uint64_t draw_threshold(const Rational& q) {
    Integer scaled = (q.get_num() << 64) / q.get_den();
    if (scaled >= Integer(1) << 64) return ~0ULL;
    Integer low = scaled & Integer(0xffffffffUL);
    Integer high = scaled >> 32;
    return (static_cast<std::uint64_t>(high.get_ui()) << 32) |
           static_cast<std::uint64_t>(low.get_ui());
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<double> sorted_desc_doubles(const std::vector<Rational>& xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (const Rational& x : xs) out.push_back(x.get_d());
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<Rational> sorted_desc(std::vector<Rational> xs) {
    std::sort(xs.rbegin(), xs.rend());
    return xs;
}

}  // namespace

BernoulliSpec::BernoulliSpec(int k_, int l_, std::vector<Rational> p_, std::vector<Rational> q_,
                             std::uint64_t seed_)
    : k(k_), l(l_), p(std::move(p_)), q(std::move(q_)), seed(seed_) {
    if (k < 0 || l < 0 || k + l == 0) throw std::invalid_argument("empty alphabet");
    if (p.size() != static_cast<std::size_t>(k) || q.size() != static_cast<std::size_t>(l))
        throw std::invalid_argument("probability count must match alphabet sizes");
    Rational total = 0;
    for (const auto* list : {&p, &q})
        for (const Rational& x : *list) {
            if (x < 0) throw std::invalid_argument("negative probability");
            total += x;
        }
    if (total != 1) throw std::invalid_argument("probabilities must sum to 1 exactly");
}

BernoulliSpec BernoulliSpec::pure(std::vector<Rational> p_, std::uint64_t seed_) {
    const int count = static_cast<int>(p_.size());
    return BernoulliSpec(count, 0, std::move(p_), {}, seed_);
}

BernoulliSpec BernoulliSpec::uniform(int k_, std::uint64_t seed_) {
    return BernoulliSpec(k_, 0, std::vector<Rational>(k_, Rational(1, k_)), {}, seed_);
}

BernoulliSpec BernoulliSpec::with_seed(std::uint64_t s) const {
    BernoulliSpec copy = *this;
    copy.seed = s;
    return copy;
}

Word sample_word(const BernoulliSpec& spec, std::size_t n) {
    std::vector<Symbol> alphabet;
    std::vector<std::uint64_t> thresholds;
    Rational cum = 0;
    for (int v = 1; v <= spec.k; ++v) {
        alphabet.push_back(Symbol::row(v));
        cum += spec.p[v - 1];
        thresholds.push_back(draw_threshold(cum));
    }
    for (int v = spec.l; v >= 1; --v) {
        alphabet.push_back(Symbol::column(v));
        cum += spec.q[v - 1];
        thresholds.push_back(draw_threshold(cum));
    }

    auto eng = make_engine(spec.seed);
    std::vector<Symbol> syms;
    syms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t r = eng();
        std::size_t pick = alphabet.size() - 1;
        for (std::size_t j = 0; j + 1 < alphabet.size(); ++j)
            if (r < thresholds[j]) {
                pick = j;
                break;
            }
        syms.push_back(alphabet[pick]);
    }
    return Word(std::move(syms), spec.k, spec.l);
}

TrajectoryStats youngize(const Word& w, std::size_t log_every) {
    TrajectoryStats stats;
    stats.n = w.size();
    stats.row_symbol_counts.assign(std::max(w.k(), 1), 0);
    stats.col_symbol_counts.assign(std::max(w.l(), 0), 0);
    stats.q_growth.reserve(w.size());

    std::vector<std::vector<Symbol>> rows;
    auto snapshot = [&](std::size_t step) {
        TrajectorySnapshot snap;
        snap.step = step;
        snap.row_lengths.reserve(rows.size());
        for (const auto& r : rows) snap.row_lengths.push_back(static_cast<long long>(r.size()));
        snap.col_lengths.assign(static_cast<std::size_t>(std::max(w.l(), 0)), 0);
        for (const auto& r : rows)
            for (std::size_t j = 0; j < snap.col_lengths.size() && j < r.size(); ++j)
                ++snap.col_lengths[j];
        stats.snapshots.push_back(std::move(snap));
    };

    for (std::size_t i = 0; i < w.size(); ++i) {
        Symbol s = w.at(i);
        if (s.starred())
            ++stats.col_symbol_counts[s.value() - 1];
        else
            ++stats.row_symbol_counts[s.value() - 1];
        stats.q_growth.push_back(detail::insert_inplace(rows, s, InsertionVariant::mixed));
        if (log_every > 0 && (i + 1) % log_every == 0 && i + 1 < w.size()) snapshot(i + 1);
    }
    snapshot(w.size());
    stats.p = Tableau(std::move(rows));
    return stats;
}

Bracketing free_paired(const Word& w) {
    Bracketing out;
    std::vector<std::size_t> open_twos;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Symbol s = w.at(i);
        if (s.starred() || s.value() < 1 || s.value() > 2)
            throw std::invalid_argument("free_paired expects a word over {1,2}");
        if (s.value() == 2) {
            open_twos.push_back(i + 1);
        } else if (!open_twos.empty()) {
            out.pairs.emplace_back(open_twos.back(), i + 1);
            open_twos.pop_back();
        } else {
            out.free_positions.push_back(i + 1);
        }
    }
    out.free_positions.insert(out.free_positions.end(), open_twos.begin(), open_twos.end());
    std::sort(out.free_positions.begin(), out.free_positions.end());
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

Rational EstimateReport::total() const {
    Rational t = 0;
    for (const auto& c : cylinders) t += c.estimate;
    return t;
}

EstimateReport tail_estimate(const Tableau& p_tableau, int m, int k, int l) {
    if (m < 0 || static_cast<std::size_t>(m) > p_tableau.size())
        throw std::invalid_argument("estimate depth m exceeds tableau size");
    const YoungDiagram nu = p_tableau.shape();
    double schedule_bound = 1;
    for (int i = 0; i < m; ++i) schedule_bound *= static_cast<double>(nu.corners().size());
    if (schedule_bound > 1e6) throw std::length_error("deletion-schedule guard exceeded");

    std::map<Word, Rational> sums;
    for (const Word& a : all_words(k, l, static_cast<std::size_t>(m))) sums.emplace(a, 0);
    for (const SkewDecreasingFilling& s : skew_fillings(nu, m)) {
        Word a = phi(p_tableau, s);
        auto it = sums.find(a);
        if (it == sums.end()) throw std::logic_error("phi produced a word outside the alphabet");
        it->second += contained_dim_ratio(nu, s.inner());
    }

    EstimateReport report;
    report.n = p_tableau.size();
    report.m = m;
    report.k = k;
    report.l = l;
    report.lambda_n = nu;
    for (auto& [a, est] : sums) report.cylinders.push_back({a, word_shape(a), std::move(est)});
    return report;
}

EstimateReport tail_estimate(const Word& w, std::size_t n, int m) {
    if (n > w.size()) throw std::invalid_argument("n exceeds word length");
    return tail_estimate(youngize(w.prefix(n)).p, m, w.k(), w.l());
}

Rational shape_cylinder_sum(const EstimateReport& report, const YoungDiagram& lambda) {
    Rational total = 0;
    for (const auto& c : report.cylinders)
        if (c.shape == lambda) total += c.estimate;
    return total;
}

DensityReport check_density_theorem(const BernoulliSpec& spec, std::size_t n,
                                    const std::vector<std::uint64_t>& seeds, double tolerance) {
    DensityReport report;
    report.n = n;
    report.tolerance = tolerance;
    report.p_hat = sorted_desc_doubles(spec.p);
    report.q_hat = sorted_desc_doubles(spec.q);
    report.passed = true;
    for (std::uint64_t seed : seeds) {
        TrajectoryStats stats = youngize(sample_word(spec.with_seed(seed), n));
        const auto& snap = stats.snapshots.back();
        DensitySeedResult r;
        r.seed = seed;
        for (int j = 1; j <= spec.k; ++j) {
            long long len = static_cast<std::size_t>(j) <= snap.row_lengths.size()
                                ? snap.row_lengths[j - 1]
                                : 0;
            r.row_normalized.push_back(static_cast<double>(len) / static_cast<double>(n));
            r.max_row_deviation = std::max(
                r.max_row_deviation, std::abs(r.row_normalized.back() - report.p_hat[j - 1]));
        }
        for (int j = 1; j <= spec.l; ++j) {
            long long len = static_cast<std::size_t>(j) <= snap.col_lengths.size()
                                ? snap.col_lengths[j - 1]
                                : 0;
            r.col_normalized.push_back(static_cast<double>(len) / static_cast<double>(n));
            r.max_col_deviation = std::max(
                r.max_col_deviation, std::abs(r.col_normalized.back() - report.q_hat[j - 1]));
        }
        if (r.max_row_deviation > tolerance || r.max_col_deviation > tolerance)
            report.passed = false;
        report.per_seed.push_back(std::move(r));
    }
    return report;
}

namespace {

ThomaParams thoma_params_of(const BernoulliSpec& spec) {
    return ThomaParams(sorted_desc(spec.p), sorted_desc(spec.q));
}

}  // namespace

ThomaReport check_thoma(const BernoulliSpec& spec, std::size_t n, int m,
                        const std::vector<std::uint64_t>& seeds, double tolerance,
                        const std::vector<Word>* words) {
    if (words && words->size() != seeds.size())
        throw std::invalid_argument("replay word count must match seed count");
    ThomaReport report;
    report.n = n;
    report.m = m;
    report.tolerance = tolerance;
    report.seeds = seeds;

    ThomaParams params = thoma_params_of(spec);
    std::vector<std::pair<YoungDiagram, Rational>> targets;
    for (int size = 1; size <= m; ++size)
        for (const YoungDiagram& lambda : partitions_of(size))
            targets.emplace_back(lambda, thoma_cylinder(lambda, params));

    std::vector<std::map<std::vector<long long>, Rational>> per_seed_sums(seeds.size());
    for (std::size_t si = 0; si < seeds.size(); ++si) {
        Word w = words ? (*words)[si] : sample_word(spec.with_seed(seeds[si]), n);
        if (w.size() < n) throw std::invalid_argument("replay word shorter than n");
        Tableau p_tab = youngize(w.prefix(n)).p;
        for (int size = 1; size <= m; ++size) {
            EstimateReport est = tail_estimate(p_tab, size, spec.k, spec.l);
            for (const auto& c : est.cylinders) {
                auto& slot = per_seed_sums[si][c.shape.rows()];
                slot += c.estimate;
            }
        }
    }

    report.passed = true;
    for (auto& [lambda, reference] : targets) {
        ThomaShapeResult r;
        r.shape = lambda;
        r.reference = reference;
        Rational sum = 0;
        for (std::size_t si = 0; si < seeds.size(); ++si) {
            auto it = per_seed_sums[si].find(lambda.rows());
            Rational est = it == per_seed_sums[si].end() ? Rational(0) : it->second;
            sum += est;
            r.per_seed.push_back(std::move(est));
        }
        Rational avg = seeds.empty() ? Rational(0) : sum / Rational(static_cast<long>(seeds.size()));
        r.seed_average = avg.get_d();
        r.deviation = std::abs(Rational(avg - reference).get_d());
        if (r.deviation > tolerance) report.passed = false;
        report.shapes.push_back(std::move(r));
    }
    return report;
}

EqualDensityReport check_equal_density_case(int k, std::size_t n, int m,
                                            const std::vector<std::uint64_t>& seeds,
                                            double tolerance) {
    EqualDensityReport report;
    report.identity_ok = true;
    std::vector<Rational> uniform(k, Rational(1, k));
    for (int size = 0; size <= 6; ++size) {
        Integer power = 1;
        for (int i = 0; i < size; ++i) power *= k;
        for (const YoungDiagram& lambda : partitions_of(size)) {
            Rational lhs(count_ssyt(lambda, k), power);
            lhs.canonicalize();
            if (lhs != schur(lambda, uniform)) report.identity_ok = false;
        }
    }
    report.monte_carlo = check_thoma(BernoulliSpec::uniform(k, 0), n, m, seeds, tolerance);
    report.passed = report.identity_ok && report.monte_carlo.passed;
    return report;
}

std::vector<YoungDiagram> sample_central_path(const std::vector<Rational>& p, std::size_t n,
                                              std::uint64_t seed) {
    const int k = static_cast<int>(p.size());
    if (k == 0) throw std::invalid_argument("empty parameter vector");
    bool all_equal = std::all_of(p.begin(), p.end(), [&](const Rational& x) { return x == p[0]; });
    bool distinct = true;
    for (std::size_t i = 0; i < p.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] == p[j]) distinct = false;

    auto weight = [&](const YoungDiagram& d) -> Rational {
        if (all_equal) return Rational(count_ssyt(d, k));  // common k^-|d| factor cancels
        if (distinct) return schur_alternant(d, p);
        if (d.size() > 40) throw std::length_error("central path guard for tied parameters");
        return schur(d, p);
    };

    auto eng = make_engine(seed);
    std::vector<YoungDiagram> path;
    path.reserve(n + 1);
    YoungDiagram cur;
    path.push_back(cur);
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<YoungDiagram> nexts;
        std::vector<Rational> weights;
        Rational total = 0;
        for (CellPosition c : cur.addable_cells()) {
            if (c.row > k) continue;
            YoungDiagram mu = cur.with_cell_added(c);
            Rational w = weight(mu);
            total += w;
            nexts.push_back(std::move(mu));
            weights.push_back(std::move(w));
        }
        std::uint64_t r = eng();
        std::size_t pick = nexts.size() - 1;
        Rational cum = 0;
        for (std::size_t i = 0; i + 1 < nexts.size(); ++i) {
            cum += weights[i];
            if (r < draw_threshold(cum / total)) {
                pick = i;
                break;
            }
        }
        cur = nexts[pick];
        path.push_back(cur);
    }
    return path;
}

DegenerateReport degenerate_measure_demo(int k, std::size_t n, std::uint64_t seed) {
    DegenerateReport report;
    report.n = n;

    std::vector<Rational> uniform(k, Rational(1, k));
    std::vector<YoungDiagram> shapes = sample_central_path(uniform, n, seed);
    std::vector<Tableau> tableaux;
    tableaux.reserve(shapes.size());
    for (const YoungDiagram& d : shapes) tableaux.push_back(maximal_tableau(d, k, 0));
    report.maximal_word = path_to_word(tableaux, k, 0);

    EstimateReport est1 = tail_estimate(tableaux.back(), 1, k, 0);
    for (const auto& c : est1.cylinders) {
        if (c.estimate == 0) report.degenerate_has_zero = true;
        report.maximal_m1.emplace_back(c.a, c.estimate);
    }

    Word bern = sample_word(BernoulliSpec::uniform(k, seed + 1), n);
    EstimateReport est2 = tail_estimate(youngize(bern).p, 2, k, 0);
    report.nondegenerate_all_positive = true;
    for (const auto& c : est2.cylinders) {
        if (c.estimate == 0) report.nondegenerate_all_positive = false;
        report.bernoulli_m2.emplace_back(c.a, c.estimate);
    }
    return report;
}

namespace {

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    return parse_rational(j.dump());  // decimal text of the number, parsed exactly
}

}  // namespace

BernoulliSpec ExperimentConfig::spec() const {
    return BernoulliSpec(k, l, p, q, seeds.empty() ? 0 : seeds.front());
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    ExperimentConfig cfg;
    cfg.mode = j.value("mode", std::string("pure"));
    if (cfg.mode != "pure" && cfg.mode != "mixed" && cfg.mode != "uniform")
        throw std::invalid_argument("mode must be pure, mixed or uniform: " + cfg.mode);
    if (!j.contains("k")) throw std::invalid_argument("config field k is required");
    cfg.k = j.at("k").get<int>();
    cfg.l = j.value("l", 0);
    if (cfg.k <= 0 || cfg.l < 0) throw std::invalid_argument("bad alphabet sizes k/l");
    if (cfg.mode == "uniform") {
        if (j.contains("p")) throw std::invalid_argument("uniform mode fixes p; drop the field");
        cfg.p.assign(cfg.k, Rational(1, cfg.k));
    } else {
        if (!j.contains("p")) throw std::invalid_argument("config field p is required");
        for (const auto& x : j.at("p")) cfg.p.push_back(rational_from_json(x));
    }
    if (j.contains("q"))
        for (const auto& x : j.at("q")) cfg.q.push_back(rational_from_json(x));
    if (cfg.mode == "mixed" && cfg.l == 0)
        throw std::invalid_argument("mixed mode needs l > 0");
    if (cfg.mode != "mixed" && cfg.l != 0)
        throw std::invalid_argument("mode " + cfg.mode + " is pure; drop l/q");
    if (!j.contains("n")) throw std::invalid_argument("config field n is required");
    cfg.n = j.at("n").get<std::size_t>();
    cfg.m = j.value("m", 0);
    if (cfg.m < 0) throw std::invalid_argument("m must be nonnegative");
    if (!j.contains("seeds") || j.at("seeds").empty())
        throw std::invalid_argument("config field seeds must list at least one seed");
    for (const auto& s : j.at("seeds")) cfg.seeds.push_back(s.get<std::uint64_t>());
    cfg.log_every = j.value("log_every", std::size_t{0});
    cfg.tolerance_density = j.value("tolerance_density", 0.015);
    cfg.tolerance_thoma = j.value("tolerance_thoma", 0.02);
    // constructing the spec validates probability normalization
    (void)cfg.spec();
    return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::vector<Word>* resume_words) {
    ExperimentResult result;
    BernoulliSpec spec = config.spec();

    if (resume_words) {
        if (resume_words->size() != config.seeds.size())
            throw std::invalid_argument("resume word count must match seed count");
        result.words = *resume_words;
    } else {
        for (std::uint64_t seed : config.seeds)
            result.words.push_back(sample_word(spec.with_seed(seed), config.n));
    }

    // density section
    std::vector<double> p_hat = sorted_desc_doubles(spec.p);
    std::vector<double> q_hat = sorted_desc_doubles(spec.q);
    std::vector<DensitySeedResult> density;
    bool density_passed = true;
    for (std::size_t si = 0; si < config.seeds.size(); ++si) {
        TrajectoryStats stats = youngize(result.words[si].prefix(config.n), config.log_every);
        const auto& snap = stats.snapshots.back();
        DensitySeedResult r;
        r.seed = config.seeds[si];
        for (int jdx = 1; jdx <= spec.k; ++jdx) {
            long long len = static_cast<std::size_t>(jdx) <= snap.row_lengths.size()
                                ? snap.row_lengths[jdx - 1]
                                : 0;
            r.row_normalized.push_back(static_cast<double>(len) / static_cast<double>(config.n));
            r.max_row_deviation =
                std::max(r.max_row_deviation, std::abs(r.row_normalized.back() - p_hat[jdx - 1]));
        }
        for (int jdx = 1; jdx <= spec.l; ++jdx) {
            long long len = static_cast<std::size_t>(jdx) <= snap.col_lengths.size()
                                ? snap.col_lengths[jdx - 1]
                                : 0;
            r.col_normalized.push_back(static_cast<double>(len) / static_cast<double>(config.n));
            r.max_col_deviation =
                std::max(r.max_col_deviation, std::abs(r.col_normalized.back() - q_hat[jdx - 1]));
        }
        if (r.max_row_deviation > config.tolerance_density ||
            r.max_col_deviation > config.tolerance_density)
            density_passed = false;
        density.push_back(std::move(r));
    }

    // Thoma section (skipped when m = 0)
    std::optional<ThomaReport> thoma;
    bool identity_ok = true;
    if (config.m > 0) {
        thoma = check_thoma(spec, config.n, config.m, config.seeds, config.tolerance_thoma,
                            &result.words);
        if (config.mode == "uniform") {
            std::vector<Rational> uniform(config.k, Rational(1, config.k));
            for (int size = 0; size <= 6; ++size) {
                Integer power = 1;
                for (int i = 0; i < size; ++i) power *= config.k;
                for (const YoungDiagram& lambda : partitions_of(size)) {
                    Rational lhs(count_ssyt(lambda, config.k), power);
                    lhs.canonicalize();
                    if (lhs != schur(lambda, uniform)) identity_ok = false;
                }
            }
        }
    }
    result.passed = density_passed && (!thoma || thoma->passed) && identity_ok;

    // JSON report
    nlohmann::ordered_json report;
    report["config"]["mode"] = config.mode;
    report["config"]["k"] = config.k;
    report["config"]["l"] = config.l;
    {
        auto& jp = report["config"]["p"] = nlohmann::ordered_json::array();
        for (const auto& x : config.p) jp.push_back(to_string(x));
        auto& jq = report["config"]["q"] = nlohmann::ordered_json::array();
        for (const auto& x : config.q) jq.push_back(to_string(x));
    }
    report["config"]["n"] = config.n;
    report["config"]["m"] = config.m;
    report["config"]["seeds"] = config.seeds;
    report["config"]["log_every"] = config.log_every;
    report["config"]["tolerance_density"] = config.tolerance_density;
    report["config"]["tolerance_thoma"] = config.tolerance_thoma;
    report["rng"] = kRngAlgorithm;
    report["resumed"] = resume_words != nullptr;

    auto& jdensity = report["density"] = nlohmann::ordered_json::array();
    for (const auto& r : density) {
        nlohmann::ordered_json jr;
        jr["seed"] = r.seed;
        jr["rows_normalized"] = r.row_normalized;
        jr["cols_normalized"] = r.col_normalized;
        jr["max_row_deviation"] = r.max_row_deviation;
        jr["max_col_deviation"] = r.max_col_deviation;
        jdensity.push_back(std::move(jr));
    }
    report["density_passed"] = density_passed;

    std::string csv = "seed,kind,key,estimate,reference,deviation\n";
    for (const auto& r : density) {
        for (std::size_t jdx = 0; jdx < r.row_normalized.size(); ++jdx)
            csv += std::to_string(r.seed) + ",density_row,row" + std::to_string(jdx + 1) + "," +
                   fmt_double(r.row_normalized[jdx]) + "," + fmt_double(p_hat[jdx]) + "," +
                   fmt_double(std::abs(r.row_normalized[jdx] - p_hat[jdx])) + "\n";
        for (std::size_t jdx = 0; jdx < r.col_normalized.size(); ++jdx)
            csv += std::to_string(r.seed) + ",density_col,col" + std::to_string(jdx + 1) + "," +
                   fmt_double(r.col_normalized[jdx]) + "," + fmt_double(q_hat[jdx]) + "," +
                   fmt_double(std::abs(r.col_normalized[jdx] - q_hat[jdx])) + "\n";
    }

    if (thoma) {
        auto& jshapes = report["thoma"]["shapes"] = nlohmann::ordered_json::array();
        for (const auto& s : thoma->shapes) {
            nlohmann::ordered_json js;
            js["shape"] = to_string(s.shape);
            js["reference"] = to_string(s.reference);
            js["reference_value"] = s.reference.get_d();
            auto& jper = js["per_seed"] = nlohmann::ordered_json::array();
            for (const auto& e : s.per_seed) jper.push_back(to_string(e));
            js["seed_average"] = s.seed_average;
            js["deviation"] = s.deviation;
            jshapes.push_back(std::move(js));
        }
        report["thoma"]["passed"] = thoma->passed;
        if (config.mode == "uniform") report["thoma"]["identity_ok"] = identity_ok;

        for (const auto& s : thoma->shapes)
            for (std::size_t si = 0; si < config.seeds.size(); ++si)
                csv += std::to_string(config.seeds[si]) + ",shape," + to_string(s.shape) + "," +
                       fmt_double(s.per_seed[si].get_d()) + "," +
                       fmt_double(s.reference.get_d()) + "," +
                       fmt_double(std::abs(Rational(s.per_seed[si] - s.reference).get_d())) + "\n";
        for (const auto& s : thoma->shapes)
            csv += "avg,shape," + to_string(s.shape) + "," + fmt_double(s.seed_average) + "," +
                   fmt_double(s.reference.get_d()) + "," + fmt_double(s.deviation) + "\n";
    }
    report["passed"] = result.passed;

    result.report_json = report.dump(2) + "\n";
    result.report_csv = std::move(csv);
    return result;
}

}  // namespace swg
