#include "fdns/eval.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "fdns/errors.hpp"
#include "fdns/imageio.hpp"
#include "fdns/parallel.hpp"
#include "fdns/rng.hpp"
#include "fdns/version.hpp"

namespace fs = std::filesystem;

namespace fdns {

namespace {

void finalize_row(RobustnessRow& row) {
    row.n = static_cast<int>(row.per_image.size());
    if (row.n == 0) return;
    double total = 0.0, lo = row.per_image.front().corr, hi = lo;
    for (const auto& o : row.per_image) {
        total += o.corr;
        lo = std::min(lo, o.corr);
        hi = std::max(hi, o.corr);
    }
    row.mean = total / row.n;
    row.min = lo;
    row.max = hi;
}

} // namespace

RobustnessReport robustness_bench(const std::vector<NamedImage>& images,
                                  const std::string& corpus_id,
                                  const std::vector<AttackSpec>& grid,
                                  const FdnsParams& params, int threads) {
    params.validate();
    if (images.empty()) throw ConfigError("robustness_bench: empty corpus");
    if (grid.empty()) throw ConfigError("robustness_bench: empty attack grid");

    RobustnessReport report;
    report.corpus_id = corpus_id;
    report.fingerprint_hex = params.fingerprint_hex();
    report.tool_version = kToolVersion;
    report.rows.resize(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) report.rows[g].spec = grid[g];

    // (image, attack) cells are independent; results land in fixed slots so the
    // fold below does not depend on scheduling.
    std::vector<HashVector> originals(images.size());
    parallel_for(images.size(), threads,
                 [&](std::size_t i) { originals[i] = hash_image(images[i].image, params); });

    std::vector<std::vector<double>> cells(grid.size(),
                                           std::vector<double>(images.size(), 0.0));
    parallel_for(images.size() * grid.size(), threads, [&](std::size_t task) {
        const std::size_t i = task / grid.size();
        const std::size_t g = task % grid.size();
        const GrayImage attacked = apply_attack(images[i].image, grid[g]);
        cells[g][i] = correlation(originals[i], hash_image(attacked, params));
    });

    for (std::size_t g = 0; g < grid.size(); ++g) {
        RobustnessRow& row = report.rows[g];
        row.per_image.reserve(images.size());
        for (std::size_t i = 0; i < images.size(); ++i)
            row.per_image.push_back({images[i].id, cells[g][i]});
        finalize_row(row);
    }
    return report;
}

RobustnessReport robustness_bench_dir(const std::string& corpus_dir,
                                      const std::vector<AttackSpec>& grid,
                                      const FdnsParams& params, int threads) {
    std::vector<NamedImage> images;
    std::vector<SkippedImage> skipped;
    for (const std::string& rel : list_corpus_images(corpus_dir)) {
        try {
            images.push_back({rel, load_gray((fs::path(corpus_dir) / rel).string())});
        } catch (const Error& e) {
            skipped.push_back({rel, e.what()});
        }
    }
    if (images.empty()) throw ConfigError("robustness_bench: no decodable images in " + corpus_dir);
    RobustnessReport report = robustness_bench(images, corpus_dir, grid, params, threads);
    report.skipped = std::move(skipped);
    return report;
}

void TemplateDb::validate() const {
    if (entries.empty()) throw ConfigError("template db: no entries");
    const std::uint64_t fp = params.fingerprint();
    for (const auto& e : entries) {
        if (e.hash.params_fingerprint != fp)
            throw IncompatibleHash("template db: entry '" + e.source +
                                   "' does not match the db parameters");
    }
}

Classification classify(const HashVector& query, const TemplateDb& db) {
    db.validate();
    const TemplateEntry* best = nullptr;
    double best_score = 0.0;
    for (const auto& e : db.entries) {
        const double score = correlation(query, e.hash);
        if (best == nullptr || score > best_score ||
            (score == best_score &&
             (e.label < best->label || (e.label == best->label && e.source < best->source)))) {
            best = &e;
            best_score = score;
        }
    }
    return {best->label, best->source, best_score};
}

ClassificationResult classification_eval(const std::vector<LabeledHash>& corpus,
                                         int templates_per_class, int repetitions,
                                         std::uint64_t seed, const FdnsParams& params) {
    params.validate();
    if (templates_per_class < 1) throw ConfigError("classification_eval: templates_per_class < 1");
    if (repetitions < 1) throw ConfigError("classification_eval: repetitions < 1");
    if (corpus.empty()) throw ConfigError("classification_eval: empty corpus");

    // class -> indices into corpus, in corpus order
    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < corpus.size(); ++i) by_class[corpus[i].label].push_back(i);
    for (const auto& [label, idx] : by_class) {
        if (static_cast<int>(idx.size()) <= templates_per_class)
            throw ConfigError("classification_eval: class '" + label + "' has " +
                              std::to_string(idx.size()) + " images, needs more than " +
                              std::to_string(templates_per_class));
    }

    ClassificationResult result;
    result.repetitions = repetitions;
    result.seed = seed;

    long pooled_correct = 0, pooled_total = 0;
    for (int rep = 0; rep < repetitions; ++rep) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(rep)));
        TemplateDb db;
        db.params = params;
        std::set<std::size_t> selected;
        for (const auto& [label, idx] : by_class) {
            // partial Fisher-Yates over a copy of the class indices
            std::vector<std::size_t> pool = idx;
            for (int t = 0; t < templates_per_class; ++t) {
                const std::size_t j =
                    t + static_cast<std::size_t>(rng.below(pool.size() - t));
                std::swap(pool[t], pool[j]);
                selected.insert(pool[t]);
                db.entries.push_back({label, corpus[pool[t]].id, corpus[pool[t]].hash});
            }
        }

        long correct = 0, total = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (selected.count(i)) continue; // templates are never test items
            const Classification c = classify(corpus[i].hash, db);
            ++total;
            if (c.label == corpus[i].label) ++correct;
            ++result.confusion[{corpus[i].label, c.label}];
        }
        result.per_rep_accuracy.push_back(total == 0 ? 0.0
                                                     : static_cast<double>(correct) / total);
        pooled_correct += correct;
        pooled_total += total;
    }

    double total_acc = 0.0;
    for (const double a : result.per_rep_accuracy) total_acc += a;
    result.mean_accuracy = total_acc / repetitions;
    result.pooled_accuracy =
        pooled_total == 0 ? 0.0 : static_cast<double>(pooled_correct) / pooled_total;
    return result;
}

std::vector<std::string> list_corpus_images(const std::string& corpus_dir) {
    if (!fs::is_directory(corpus_dir)) throw ConfigError("not a directory: " + corpus_dir);
    std::vector<std::string> rel;
    for (const auto& entry : fs::recursive_directory_iterator(corpus_dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string p = entry.path().string();
        if (!has_image_extension(p)) continue;
        rel.push_back(fs::relative(entry.path(), corpus_dir).generic_string());
    }
    std::sort(rel.begin(), rel.end());
    return rel;
}

std::vector<LabeledHash> hash_labeled_dir(const std::string& corpus_dir, const FdnsParams& params,
                                          int threads) {
    params.validate();
    const std::vector<std::string> files = list_corpus_images(corpus_dir);
    std::vector<LabeledHash> corpus;
    for (const std::string& rel : files) {
        const std::size_t slash = rel.find('/');
        if (slash == std::string::npos || slash == 0)
            throw ConfigError("labeled corpus expects <label>/<image>, got: " + rel);
        corpus.push_back({rel.substr(0, slash), rel, HashVector{}});
    }
    if (corpus.empty()) throw ConfigError("no images under " + corpus_dir);
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
        corpus[i].hash =
            hash_image(load_gray((fs::path(corpus_dir) / corpus[i].id).string()), params);
    });
    return corpus;
}

} // namespace fdns
