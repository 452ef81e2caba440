#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdns/errors.hpp"
#include "fdns/eval.hpp"
#include "fdns/fdns.hpp"
#include "fdns/imageio.hpp"
#include "fdns/parallel.hpp"
#include "fdns/records.hpp"
#include "fdns/rng.hpp"
#include "fdns/version.hpp"

namespace fs = std::filesystem;
using namespace fdns;

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kIoError = 2,
    kIncompatible = 3,
    kParseError = 4,
    kConfigError = 5,
};

struct Options {
    FdnsParams params;
    int threads = default_threads();
    std::uint64_t seed = 0;
    std::string output;
};

void add_params_flags(CLI::App* cmd, FdnsParams& p) {
    cmd->add_option("--params-canonical-w", p.canonical_w, "Canonical width before hashing");
    cmd->add_option("--params-canonical-h", p.canonical_h, "Canonical height before hashing");
    cmd->add_option("--params-gaussian-kernel", p.gaussian_kernel, "Smoothing kernel size (odd)");
    cmd->add_option("--params-gaussian-sigma", p.gaussian_sigma, "Smoothing sigma");
    cmd->add_option("--params-search-window", p.search_window, "Searching window N (odd)");
    cmd->add_option("--params-neighborhood-window", p.neighborhood_window,
                    "Neighborhood window M (odd)");
}

int cmd_hash(const std::string& input, const Options& opt, bool print_values) {
    HashRecord record;
    record.params = opt.params;
    record.hash = hash_image(load_gray(input), opt.params);
    if (!opt.output.empty()) write_hash_record(record, opt.output);
    std::cout << "fingerprint: " << opt.params.fingerprint_hex() << "\n";
    if (print_values)
        for (const double v : record.hash.values) std::cout << format_double(v) << "\n";
    return kOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
    const HashRecord a = read_hash_record(path_a);
    const HashRecord b = read_hash_record(path_b);
    const double score = correlation(a.hash, b.hash);
    std::printf("%.6f\n", score);
    return kOk;
}

int cmd_attack(const std::string& input, const std::string& spec_text, const std::string& output) {
    const AttackSpec spec = AttackSpec::parse(spec_text);
    if (output.empty()) throw ConfigError("attack: --output is required");
    save_png_gray(apply_attack(load_gray(input), spec), output);
    return kOk;
}

int cmd_bench(const std::string& corpus, const std::string& grid_file,
              const std::string& detail_file, const Options& opt) {
    if (opt.output.empty()) throw ConfigError("bench: --output is required");
    const std::vector<AttackSpec> grid =
        grid_file.empty() ? default_grid() : load_grid_file(grid_file);
    const RobustnessReport report = robustness_bench_dir(corpus, grid, opt.params, opt.threads);
    write_report_csv(report, opt.output);
    if (!detail_file.empty()) write_report_detail(report, detail_file);
    std::cout << "rows: " << report.rows.size() << " images-skipped: " << report.skipped.size()
              << "\n";
    return kOk;
}

int cmd_templates(const std::string& corpus, int per_class, const Options& opt) {
    if (opt.output.empty()) throw ConfigError("templates: --output is required");
    if (per_class < 1) throw ConfigError("templates: --per-class must be >= 1");

    const std::vector<std::string> files = list_corpus_images(corpus);
    std::map<std::string, std::vector<std::string>> by_class;
    for (const std::string& rel : files) {
        const std::size_t slash = rel.find('/');
        if (slash == std::string::npos || slash == 0)
            throw ConfigError("labeled corpus expects <label>/<image>, got: " + rel);
        by_class[rel.substr(0, slash)].push_back(rel);
    }
    if (by_class.empty()) throw ConfigError("no images under " + corpus);
    for (const auto& [label, imgs] : by_class) {
        if (static_cast<int>(imgs.size()) < per_class)
            throw ConfigError("class '" + label + "' has " + std::to_string(imgs.size()) +
                              " images, needs at least " + std::to_string(per_class));
    }

    Rng rng(opt.seed);
    std::vector<std::pair<std::string, std::string>> chosen; // (label, rel path)
    for (const auto& [label, imgs] : by_class) {
        std::vector<std::string> pool = imgs;
        for (int t = 0; t < per_class; ++t) {
            const std::size_t j = t + static_cast<std::size_t>(rng.below(pool.size() - t));
            std::swap(pool[t], pool[j]);
            chosen.emplace_back(label, pool[t]);
        }
    }

    TemplateDb db;
    db.params = opt.params;
    db.entries.resize(chosen.size());
    parallel_for(chosen.size(), opt.threads, [&](std::size_t i) {
        db.entries[i] = {chosen[i].first, chosen[i].second,
                         hash_image(load_gray((fs::path(corpus) / chosen[i].second).string()),
                                    opt.params)};
    });
    write_template_db(db, opt.output);
    std::cout << "templates: " << db.entries.size() << " classes: " << by_class.size() << "\n";
    return kOk;
}

int cmd_classify(const std::string& input, const std::string& db_path, bool eval_mode,
                 const Options& opt) {
    const TemplateDb db = read_template_db(db_path);

    if (fs::is_regular_file(input)) {
        const HashVector h = hash_image(load_gray(input), db.params);
        const Classification c = classify(h, db);
        std::printf("%s\t%s\t%.6f\n", input.c_str(), c.label.c_str(), c.score);
        return kOk;
    }
    if (!fs::is_directory(input)) throw IoError("no such file or directory: " + input);

    const std::vector<std::string> files = list_corpus_images(input);
    if (files.empty()) throw ConfigError("no images under " + input);

    std::vector<Classification> results(files.size());
    parallel_for(files.size(), opt.threads, [&](std::size_t i) {
        const HashVector h = hash_image(load_gray((fs::path(input) / files[i]).string()), db.params);
        results[i] = classify(h, db);
    });

    long correct = 0, labeled = 0;
    std::map<std::pair<std::string, std::string>, long> confusion;
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::printf("%s\t%s\t%.6f\n", files[i].c_str(), results[i].label.c_str(),
                    results[i].score);
        const std::size_t slash = files[i].find('/');
        if (eval_mode) {
            if (slash == std::string::npos || slash == 0)
                throw ConfigError("--eval expects <label>/<image> layout, got: " + files[i]);
            const std::string truth = files[i].substr(0, slash);
            ++labeled;
            if (truth == results[i].label) ++correct;
            ++confusion[{truth, results[i].label}];
        }
    }
    if (eval_mode) {
        std::printf("accuracy\t%.6f\t(%ld/%ld)\n", static_cast<double>(correct) / labeled, correct,
                    labeled);
        for (const auto& [key, count] : confusion)
            std::printf("confusion\t%s\t%s\t%ld\n", key.first.c_str(), key.second.c_str(), count);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"f-dns perceptual image hashing"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Options opt;
    try {
        if (const char* config = std::getenv("FDNS_CONFIG"); config && *config)
            opt.params = load_params_config(config, opt.params);
    } catch (const IoError& e) {
        std::cerr << "error: FDNS_CONFIG: " << e.what() << "\n";
        return kIoError;
    } catch (const ParseError& e) {
        std::cerr << "error: FDNS_CONFIG: " << e.what() << "\n";
        return kParseError;
    }

    std::string input, second, grid_file, detail_file, db_path;
    bool print_values = false;
    bool eval_mode = false;
    int per_class = 1;

    CLI::App* hash_cmd = app.add_subcommand("hash", "Hash a PNG/JPEG file");
    hash_cmd->add_option("input", input, "Image file")->required();
    hash_cmd->add_option("-o,--output", opt.output, "Hash record path");
    hash_cmd->add_flag("--print", print_values, "Print the 64 hash values");
    add_params_flags(hash_cmd, opt.params);

    CLI::App* compare_cmd = app.add_subcommand("compare", "Correlate two hash records");
    compare_cmd->add_option("a", input, "First hash record")->required();
    compare_cmd->add_option("b", second, "Second hash record")->required();

    CLI::App* attack_cmd = app.add_subcommand("attack", "Apply a content-preserving operation");
    attack_cmd->add_option("input", input, "Image file")->required();
    attack_cmd->add_option("spec", second, "Attack spec kind:parameter[:seed]")->required();
    attack_cmd->add_option("-o,--output", opt.output, "Output PNG path")->required();

    CLI::App* bench_cmd = app.add_subcommand("bench", "Robustness benchmark over a corpus dir");
    bench_cmd->add_option("corpus", input, "Corpus directory")->required();
    bench_cmd->add_option("-o,--output", opt.output, "CSV report path")->required();
    bench_cmd->add_option("--grid", grid_file, "Attack grid file (default: built-in grid)");
    bench_cmd->add_option("--detail", detail_file, "Structured per-image report path");
    bench_cmd->add_option("--threads", opt.threads, "Worker threads");
    add_params_flags(bench_cmd, opt.params);

    CLI::App* templates_cmd =
        app.add_subcommand("templates", "Build a template db from a labeled corpus");
    templates_cmd->add_option("corpus", input, "Labeled corpus directory")->required();
    templates_cmd->add_option("--per-class", per_class, "Templates per class");
    templates_cmd->add_option("--seed", opt.seed, "Selection seed");
    templates_cmd->add_option("-o,--output", opt.output, "Template db path")->required();
    templates_cmd->add_option("--threads", opt.threads, "Worker threads");
    add_params_flags(templates_cmd, opt.params);

    CLI::App* classify_cmd = app.add_subcommand("classify", "Nearest-template classification");
    classify_cmd->add_option("input", input, "Image file or directory")->required();
    classify_cmd->add_option("--db", db_path, "Template db path")->required();
    classify_cmd->add_flag("--eval", eval_mode, "Score a labeled directory");
    classify_cmd->add_option("--threads", opt.threads, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        if (hash_cmd->parsed()) return cmd_hash(input, opt, print_values);
        if (compare_cmd->parsed()) return cmd_compare(input, second);
        if (attack_cmd->parsed()) return cmd_attack(input, second, opt.output);
        if (bench_cmd->parsed()) return cmd_bench(input, grid_file, detail_file, opt);
        if (templates_cmd->parsed()) return cmd_templates(input, per_class, opt);
        if (classify_cmd->parsed()) return cmd_classify(input, db_path, eval_mode, opt);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const IncompatibleHash& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIncompatible;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
