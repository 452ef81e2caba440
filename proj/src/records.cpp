#include "fdns/records.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fdns/errors.hpp"
#include "fdns/version.hpp"

namespace fdns {

namespace {

constexpr const char* kAlgorithmTag = "f-dns";
constexpr int kRecordVersion = 1;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!out) throw IoError("cannot write file: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    return in;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Reads "key: value" lines into the parser state; returns false at EOF.
struct KvReader {
    std::istream& in;
    std::string path;

    std::string expect(const std::string& key) {
        std::string line;
        if (!std::getline(in, line)) throw ParseError(path + ": missing '" + key + "'");
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos || trim(line.substr(0, colon)) != key)
            throw ParseError(path + ": expected '" + key + "', got '" + line + "'");
        return trim(line.substr(colon + 1));
    }

    long expect_int(const std::string& key) {
        const std::string v = expect(key);
        try {
            std::size_t used = 0;
            const long n = std::stol(v, &used);
            if (used != v.size()) throw std::invalid_argument("trailing");
            return n;
        } catch (const std::exception&) {
            throw ParseError(path + ": bad integer for '" + key + "': " + v);
        }
    }
};

void write_params_block(std::ostream& out, const FdnsParams& p) {
    out << "canonical_w: " << p.canonical_w << "\n";
    out << "canonical_h: " << p.canonical_h << "\n";
    out << "gaussian_kernel: " << p.gaussian_kernel << "\n";
    out << "gaussian_sigma: " << format_double(p.gaussian_sigma) << "\n";
    out << "search_window: " << p.search_window << "\n";
    out << "neighborhood_window: " << p.neighborhood_window << "\n";
    out << "fingerprint: " << p.fingerprint_hex() << "\n";
}

FdnsParams read_params_block(KvReader& kv) {
    FdnsParams p;
    p.canonical_w = static_cast<int>(kv.expect_int("canonical_w"));
    p.canonical_h = static_cast<int>(kv.expect_int("canonical_h"));
    p.gaussian_kernel = static_cast<int>(kv.expect_int("gaussian_kernel"));
    p.gaussian_sigma = parse_double(kv.expect("gaussian_sigma"));
    p.search_window = static_cast<int>(kv.expect_int("search_window"));
    p.neighborhood_window = static_cast<int>(kv.expect_int("neighborhood_window"));
    const std::string stored = kv.expect("fingerprint");
    if (stored != p.fingerprint_hex())
        throw ParseError(kv.path + ": fingerprint does not match the parameter block");
    return p;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad number: '" + s + "'");
    }
}

void write_hash_record(const HashRecord& record, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "algorithm: " << kAlgorithmTag << "\n";
    out << "version: " << kRecordVersion << "\n";
    write_params_block(out, record.params);
    out << "values: " << record.hash.values.size() << "\n";
    for (const double v : record.hash.values) out << format_double(v) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

HashRecord read_hash_record(const std::string& path) {
    std::ifstream in = open_in(path);
    KvReader kv{in, path};
    if (kv.expect("algorithm") != kAlgorithmTag)
        throw ParseError(path + ": not an " + kAlgorithmTag + " hash record");
    if (kv.expect_int("version") != kRecordVersion)
        throw ParseError(path + ": unsupported record version");

    HashRecord record;
    record.params = read_params_block(kv);
    const long count = kv.expect_int("values");
    if (count != static_cast<long>(record.hash.values.size()))
        throw ParseError(path + ": expected 64 values, header says " + std::to_string(count));
    for (double& v : record.hash.values) {
        std::string line;
        if (!std::getline(in, line)) throw ParseError(path + ": truncated value list");
        v = parse_double(trim(line));
    }
    record.hash.params_fingerprint = record.params.fingerprint();
    return record;
}

void write_template_db(const TemplateDb& db, const std::string& path) {
    db.validate();
    std::ofstream out = open_out(path);
    out << "algorithm: " << kAlgorithmTag << "-templates\n";
    out << "version: " << kRecordVersion << "\n";
    write_params_block(out, db.params);
    out << "entries: " << db.entries.size() << "\n";
    for (const auto& e : db.entries) {
        out << "entry\t" << e.label << "\t" << e.source << "\n";
        for (std::size_t i = 0; i < e.hash.values.size(); ++i)
            out << (i ? " " : "") << format_double(e.hash.values[i]);
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

TemplateDb read_template_db(const std::string& path) {
    std::ifstream in = open_in(path);
    KvReader kv{in, path};
    if (kv.expect("algorithm") != std::string(kAlgorithmTag) + "-templates")
        throw ParseError(path + ": not a template db");
    if (kv.expect_int("version") != kRecordVersion)
        throw ParseError(path + ": unsupported record version");

    TemplateDb db;
    db.params = read_params_block(kv);
    const long count = kv.expect_int("entries");
    const std::uint64_t fp = db.params.fingerprint();
    for (long i = 0; i < count; ++i) {
        std::string line;
        if (!std::getline(in, line)) throw ParseError(path + ": truncated entry list");
        std::istringstream head(line);
        std::string tag, label, source;
        if (!std::getline(head, tag, '\t') || tag != "entry" || !std::getline(head, label, '\t') ||
            !std::getline(head, source))
            throw ParseError(path + ": bad entry header: " + line);
        if (!std::getline(in, line)) throw ParseError(path + ": missing values for " + source);
        std::istringstream values(line);
        TemplateEntry e;
        e.label = label;
        e.source = source;
        e.hash.params_fingerprint = fp;
        std::string tok;
        for (double& v : e.hash.values) {
            if (!(values >> tok)) throw ParseError(path + ": short value list for " + source);
            v = parse_double(tok);
        }
        if (values >> tok) throw ParseError(path + ": extra values for " + source);
        db.entries.push_back(std::move(e));
    }
    db.validate();
    return db;
}

std::string report_csv_text(const RobustnessReport& report) {
    std::ostringstream out;
    out << "kind,parameter,n,mean,min,max\n";
    for (const auto& row : report.rows) {
        out << attack_kind_name(row.spec.kind) << ',' << format_double(row.spec.parameter) << ','
            << row.n << ',' << format_double(row.mean) << ',' << format_double(row.min) << ','
            << format_double(row.max) << "\n";
    }
    return out.str();
}

void write_report_csv(const RobustnessReport& report, const std::string& path) {
    std::ofstream out = open_out(path);
    out << report_csv_text(report);
    if (!out) throw IoError("write failed: " + path);
}

std::string report_detail_text(const RobustnessReport& report) {
    std::ostringstream out;
    out << "f-dns robustness report\n";
    out << "tool_version: " << report.tool_version << "\n";
    out << "fingerprint: " << report.fingerprint_hex << "\n";
    out << "corpus: " << report.corpus_id << "\n";
    for (const auto& row : report.rows) {
        out << "row " << row.spec.text() << " n=" << row.n << " mean=" << format_double(row.mean)
            << " min=" << format_double(row.min) << " max=" << format_double(row.max) << "\n";
        for (const auto& o : row.per_image)
            out << "  image\t" << o.image << "\t" << format_double(o.corr) << "\n";
    }
    for (const auto& s : report.skipped) out << "skipped\t" << s.image << "\t" << s.reason << "\n";
    return out.str();
}

void write_report_detail(const RobustnessReport& report, const std::string& path) {
    std::ofstream out = open_out(path);
    out << report_detail_text(report);
    if (!out) throw IoError("write failed: " + path);
}

std::string classification_csv_text(const ClassificationResult& result,
                                    const std::string& fingerprint_hex) {
    std::ostringstream out;
    out << "repetition,accuracy\n";
    for (std::size_t i = 0; i < result.per_rep_accuracy.size(); ++i)
        out << i << ',' << format_double(result.per_rep_accuracy[i]) << "\n";
    out << "mean," << format_double(result.mean_accuracy) << "\n";
    out << "pooled," << format_double(result.pooled_accuracy) << "\n";
    out << "seed," << result.seed << "\n";
    out << "fingerprint," << fingerprint_hex << "\n";
    return out.str();
}

FdnsParams load_params_config(const std::string& path, const FdnsParams& base) {
    std::ifstream in = open_in(path);
    FdnsParams p = base;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.erase(hash_pos);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "canonical_w") p.canonical_w = static_cast<int>(parse_double(value));
        else if (key == "canonical_h") p.canonical_h = static_cast<int>(parse_double(value));
        else if (key == "gaussian_kernel") p.gaussian_kernel = static_cast<int>(parse_double(value));
        else if (key == "gaussian_sigma") p.gaussian_sigma = parse_double(value);
        else if (key == "search_window") p.search_window = static_cast<int>(parse_double(value));
        else if (key == "neighborhood_window")
            p.neighborhood_window = static_cast<int>(parse_double(value));
        else
            throw ParseError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return p;
}

std::vector<AttackSpec> load_grid_file(const std::string& path) {
    std::ifstream in = open_in(path);
    std::vector<AttackSpec> grid;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.erase(hash_pos);
        line = trim(line);
        if (line.empty()) continue;
        grid.push_back(AttackSpec::parse(line));
    }
    if (grid.empty()) throw ConfigError("grid file has no attack specs: " + path);
    return grid;
}

} // namespace fdns
