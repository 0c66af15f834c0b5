// Command-line front end: RSK transforms, graph exports, verification
// suites, and ergodic experiments.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "swg/ergodic.hpp"
#include "swg/graph.hpp"
#include "swg/insertion.hpp"
#include "swg/rsk.hpp"
#include "swg/verify.hpp"

namespace {

int infer_bound(const std::string& word_text, bool starred) {
    int bound = 0;
    std::size_t start = 0;
    if (word_text.empty() || word_text == "∅") return 0;
    for (std::size_t i = 0; i <= word_text.size(); ++i) {
        if (i == word_text.size() || word_text[i] == ',') {
            auto piece = word_text.substr(start, i - start);
            if (!piece.empty()) {
                swg::Symbol s = swg::parse_symbol(piece);
                if (s.starred() == starred) bound = std::max(bound, s.value());
            }
            start = i + 1;
        }
    }
    return bound;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_rsk(const std::string& word_text, const std::string& variant, int k, int l, bool quiet,
            const std::string& format) {
    if (k == 0) k = infer_bound(word_text, false);
    if (l == 0) l = infer_bound(word_text, true);
    swg::Word w = swg::parse_word(word_text, k, l);

    swg::InsertionVariant v;
    if (variant == "plain")
        v = swg::InsertionVariant::plain;
    else if (variant == "star")
        v = swg::InsertionVariant::dual;
    else if (variant == "mixed")
        v = swg::InsertionVariant::mixed;
    else
        throw CLI::ValidationError("--variant must be plain, star or mixed");

    swg::RskPair pair = swg::rsk_variant(w, v);
    if (quiet) return 0;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["word"] = swg::to_string(w);
        j["variant"] = variant;
        j["p"] = swg::to_string(pair.p);
        j["q"] = swg::to_string(pair.q);
        j["shape"] = swg::to_string(pair.p.shape());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << swg::to_string(pair.p) << " " << swg::to_string(pair.q) << "\n";
    }
    return 0;
}

int cmd_graph(int k, int l, int depth, const std::string& format, const std::string& out,
              bool quiet) {
    swg::GradedGraph g = swg::build_graph(k, l, depth);
    std::string payload = format == "json" ? swg::export_json(g) : swg::export_text(g);
    if (!out.empty()) {
        write_file(out, payload);
        if (!quiet)
            std::cout << "wrote " << out << " (" << payload.size() << " bytes)\n";
    } else if (!quiet) {
        std::cout << payload;
    }
    return 0;
}

int cmd_verify(const std::string& suite, bool quiet) {
    std::vector<swg::SuiteResult> results;
    if (suite == "all") {
        results = swg::run_all_suites();
    } else {
        results.push_back(swg::run_suite(suite));
    }
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed();
        if (!quiet)
            std::printf("%-14s %s  cases=%zu failures=%zu  %.2fs\n", r.name.c_str(),
                        r.passed() ? "PASS" : "FAIL", r.cases, r.failures.size(),
                        r.wall_seconds);
        std::size_t shown = 0;
        for (const auto& f : r.failures) {
            if (shown++ == 5) {
                std::printf("  ... %zu more failures\n", r.failures.size() - 5);
                break;
            }
            std::printf("  counterexample: %s | expected %s | got %s\n", f.input.c_str(),
                        f.expected.c_str(), f.actual.c_str());
        }
    }
    return ok ? 0 : 1;
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir,
                   const std::string& seed_override, const std::string& resume_path,
                   bool log_words, bool quiet) {
    swg::ExperimentConfig cfg = swg::parse_experiment_config(read_file(config_path));
    if (!seed_override.empty()) {
        cfg.seeds.clear();
        std::stringstream ss(seed_override);
        std::string piece;
        while (std::getline(ss, piece, ',')) cfg.seeds.push_back(std::stoull(piece));
        if (cfg.seeds.empty()) throw std::runtime_error("--seed-override lists no seeds");
    }

    std::vector<swg::Word> resume_words;
    const std::vector<swg::Word>* resume = nullptr;
    if (!resume_path.empty()) {
        std::istringstream in(read_file(resume_path));
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) resume_words.push_back(swg::parse_word(line, cfg.k, cfg.l));
        resume = &resume_words;
    }

    swg::ExperimentResult result = swg::run_experiment(cfg, resume);

    std::filesystem::path dir = out_dir;
    std::filesystem::create_directories(dir);
    write_file((dir / "report.json").string(), result.report_json);
    write_file((dir / "report.csv").string(), result.report_csv);
    if (log_words) {
        std::string log;
        for (const swg::Word& w : result.words) log += swg::to_string(w) + "\n";
        write_file((dir / "words.log").string(), log);
    }

    if (!quiet) {
        nlohmann::json j = nlohmann::json::parse(result.report_json);
        std::printf("experiment %s: n=%zu m=%d seeds=%zu\n", cfg.mode.c_str(), cfg.n, cfg.m,
                    cfg.seeds.size());
        std::printf("density %s\n", j["density_passed"].get<bool>() ? "PASS" : "FAIL");
        if (j.contains("thoma"))
            std::printf("thoma   %s\n", j["thoma"]["passed"].get<bool>() ? "PASS" : "FAIL");
        std::printf("reports in %s\n", dir.string().c_str());
        std::printf("%s\n", result.passed ? "PASS" : "FAIL");
    }
    return result.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur-Weyl graph laboratory"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out;
    bool quiet = false;
    app.add_option("--format", format, "output format: text|json")->capture_default_str();
    app.add_option("--out", out, "output file or directory");
    app.add_flag("--quiet", quiet, "suppress normal output");

    auto* rsk_cmd = app.add_subcommand("rsk", "run an RSK variant on a word");
    std::string word_text, variant = "plain";
    int rsk_k = 0, rsk_l = 0;
    rsk_cmd->add_option("--word", word_text, "comma-separated word, stars for column symbols")
        ->required();
    rsk_cmd->add_option("--variant", variant, "plain|star|mixed")->capture_default_str();
    rsk_cmd->add_option("--k", rsk_k, "row alphabet bound (default: inferred)");
    rsk_cmd->add_option("--l", rsk_l, "column alphabet bound (default: inferred)");

    auto* graph_cmd = app.add_subcommand("graph", "build and export a Schur-Weyl graph");
    int gk = 2, gl = 0, depth = 3;
    graph_cmd->add_option("--k", gk, "row alphabet size")->capture_default_str();
    graph_cmd->add_option("--l", gl, "column alphabet size")->capture_default_str();
    graph_cmd->add_option("--depth", depth, "number of levels to build")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
    bool list_suites = false;
    verify_cmd->add_flag("--list", list_suites, "list suite names");

    auto* exp_cmd = app.add_subcommand("experiment", "run an ergodic experiment from a config");
    std::string config_path, seed_override, resume_path;
    bool log_words = false;
    exp_cmd->add_option("--config", config_path, "JSON config path")->required();
    exp_cmd->add_option("--seed-override", seed_override, "comma-separated seeds replacing the config's");
    exp_cmd->add_option("--resume", resume_path, "replay trajectories from a words.log");
    exp_cmd->add_flag("--log-words", log_words, "also write words.log");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rsk_cmd->parsed()) return cmd_rsk(word_text, variant, rsk_k, rsk_l, quiet, format);
        if (graph_cmd->parsed()) return cmd_graph(gk, gl, depth, format, out, quiet);
        if (verify_cmd->parsed()) {
            if (list_suites) {
                for (const auto& name : swg::suite_names()) std::cout << name << "\n";
                return 0;
            }
            return cmd_verify(suite, quiet);
        }
        if (exp_cmd->parsed()) {
            std::string dir = !out.empty() ? out
                              : std::getenv("SWG_OUT_DIR") ? std::getenv("SWG_OUT_DIR")
                                                           : ".";
            return cmd_experiment(config_path, dir, seed_override, resume_path, log_words, quiet);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
