#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fdns/attacks.hpp"
#include "fdns/fdns.hpp"

namespace fdns {

struct NamedImage {
    std::string id;
    GrayImage image;
};

struct AttackOutcome {
    std::string image;
    double corr;
};

struct RobustnessRow {
    AttackSpec spec;
    std::vector<AttackOutcome> per_image; // ordered by image id
    int n = 0;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct SkippedImage {
    std::string image;
    std::string reason;
};

struct RobustnessReport {
    std::string corpus_id;
    std::string fingerprint_hex;
    std::string tool_version;
    std::vector<RobustnessRow> rows;
    std::vector<SkippedImage> skipped;
};

// For every image and every grid entry, correlates hash(original) with
// hash(attacked). Images are processed in the given order and folded
// deterministically; `threads` only parallelizes the hashing.
RobustnessReport robustness_bench(const std::vector<NamedImage>& images,
                                  const std::string& corpus_id,
                                  const std::vector<AttackSpec>& grid,
                                  const FdnsParams& params, int threads = 1);

// Convenience wrapper: loads every decodable image under the directory
// (sorted by relative path); undecodable files land in report.skipped.
RobustnessReport robustness_bench_dir(const std::string& corpus_dir,
                                      const std::vector<AttackSpec>& grid,
                                      const FdnsParams& params, int threads = 1);

struct TemplateEntry {
    std::string label;
    std::string source;
    HashVector hash;
};

struct TemplateDb {
    FdnsParams params;
    std::vector<TemplateEntry> entries;

    // Throws ConfigError when empty or when an entry's fingerprint disagrees
    // with the params.
    void validate() const;
};

struct Classification {
    std::string label;
    std::string source;
    double score = 0.0;
};

// Label of the template with maximum correlation. Ties break toward the
// higher score, then the lexicographically smaller label, then source.
Classification classify(const HashVector& query, const TemplateDb& db);

struct LabeledHash {
    std::string label;
    std::string id;
    HashVector hash;
};

struct ClassificationResult {
    std::vector<double> per_rep_accuracy;
    double mean_accuracy = 0.0;   // mean of per-repetition accuracies
    double pooled_accuracy = 0.0; // pooled correct / pooled total
    std::map<std::pair<std::string, std::string>, long> confusion; // (truth, predicted) -> count
    int repetitions = 0;
    std::uint64_t seed = 0;
};

// Repeated nearest-template classification. Each repetition draws
// templates_per_class random templates per class (derived from the seed),
// classifies every remaining image, and records accuracy. Classes must have
// more than templates_per_class images.
ClassificationResult classification_eval(const std::vector<LabeledHash>& corpus,
                                         int templates_per_class, int repetitions,
                                         std::uint64_t seed, const FdnsParams& params);

// Scans a one-directory-per-label corpus and hashes every image, sorted by
// (label, relative path). Undecodable files raise IoError.
std::vector<LabeledHash> hash_labeled_dir(const std::string& corpus_dir, const FdnsParams& params,
                                          int threads = 1);

// Sorted relative paths of images directly under a labeled/flat corpus dir.
std::vector<std::string> list_corpus_images(const std::string& corpus_dir);

} // namespace fdns
