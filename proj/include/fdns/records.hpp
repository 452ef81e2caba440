#pragma once

#include <string>

#include "fdns/eval.hpp"
#include "fdns/fdns.hpp"

namespace fdns {

// File form of a hash: algorithm tag, version, the full parameter block, the
// fingerprint, and the 64 values at 17 significant digits (lossless).
struct HashRecord {
    FdnsParams params;
    HashVector hash;
};

// %.17g — round-trips doubles exactly and stays human-readable.
std::string format_double(double v);
double parse_double(const std::string& s); // ParseError on junk

void write_hash_record(const HashRecord& record, const std::string& path);

// Re-derives the fingerprint from the params block and rejects files whose
// stored fingerprint disagrees.
HashRecord read_hash_record(const std::string& path);

void write_template_db(const TemplateDb& db, const std::string& path);
TemplateDb read_template_db(const std::string& path);

// CSV: kind,parameter,n,mean,min,max (comma separator, '.' decimals, LF).
void write_report_csv(const RobustnessReport& report, const std::string& path);
std::string report_csv_text(const RobustnessReport& report);

// Structured text with every per-image correlation and skipped file.
void write_report_detail(const RobustnessReport& report, const std::string& path);
std::string report_detail_text(const RobustnessReport& report);

// One row per repetition plus summary rows.
std::string classification_csv_text(const ClassificationResult& result,
                                    const std::string& fingerprint_hex);

// Key=value lines understood by FDNS_CONFIG and applied as params defaults;
// unknown keys are rejected. '#' starts a comment.
FdnsParams load_params_config(const std::string& path, const FdnsParams& base);

// Attack-spec lines ('#' comments, blank lines ignored).
std::vector<AttackSpec> load_grid_file(const std::string& path);

} // namespace fdns
