#include "fdns/fdns.hpp"

#include <cmath>
#include <cstdio>

#include "fdns/errors.hpp"

namespace fdns {

namespace {

constexpr double kPi = 3.14159265358979323846;

void append_kv(std::string& s, const char* key, const std::string& value) {
    s += key;
    s += '=';
    s += value;
    s += '|';
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

// Orthonormal DCT-II basis: row k holds the k-th basis vector of length n.
std::vector<double> dct_basis(int n) {
    std::vector<double> b(static_cast<std::size_t>(n) * n);
    const double s0 = std::sqrt(1.0 / n);
    const double s = std::sqrt(2.0 / n);
    for (int k = 0; k < n; ++k) {
        const double scale = k == 0 ? s0 : s;
        for (int i = 0; i < n; ++i)
            b[static_cast<std::size_t>(k) * n + i] = scale * std::cos(kPi * (2 * i + 1) * k / (2.0 * n));
    }
    return b;
}

} // namespace

void FdnsParams::validate() const {
    if (search_window < 3 || search_window % 2 == 0)
        throw InvalidInput("params: search_window must be odd and >= 3");
    if (neighborhood_window < 1 || neighborhood_window % 2 == 0)
        throw InvalidInput("params: neighborhood_window must be odd and >= 1");
    if (neighborhood_window >= search_window)
        throw InvalidInput("params: neighborhood_window must be smaller than search_window");
    if (gaussian_kernel < 1 || gaussian_kernel % 2 == 0)
        throw InvalidInput("params: gaussian_kernel must be odd and >= 1");
    if (!(gaussian_sigma > 0.0)) throw InvalidInput("params: gaussian_sigma must be positive");
    const int min_dim = search_window + neighborhood_window;
    if (canonical_w < min_dim || canonical_h < min_dim)
        throw InvalidInput("params: canonical dimensions must be >= search_window + neighborhood_window");
}

std::uint64_t FdnsParams::fingerprint() const {
    std::string s = "f-dns|v1|";
    append_kv(s, "cw", std::to_string(canonical_w));
    append_kv(s, "ch", std::to_string(canonical_h));
    append_kv(s, "gk", std::to_string(gaussian_kernel));
    append_kv(s, "gs", fmt_double(gaussian_sigma));
    append_kv(s, "n", std::to_string(search_window));
    append_kv(s, "m", std::to_string(neighborhood_window));
    return fnv1a64(s);
}

std::string FdnsParams::fingerprint_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fingerprint()));
    return buf;
}

CoeffMatrix dct2(const GrayImage& img) {
    if (img.empty()) throw InvalidInput("dct2: empty image");
    const int w = img.width, h = img.height;
    const std::vector<double> bw = dct_basis(w);
    const std::vector<double> bh = w == h ? bw : dct_basis(h);

    // rows: tmp = X * Bw^T
    CoeffMatrix tmp(w, h);
    for (int r = 0; r < h; ++r) {
        const double* x = &img.pixels[static_cast<std::size_t>(r) * w];
        for (int k = 0; k < w; ++k) {
            const double* basis = &bw[static_cast<std::size_t>(k) * w];
            double acc = 0.0;
            for (int c = 0; c < w; ++c) acc += basis[c] * x[c];
            tmp.at(r, k) = acc;
        }
    }
    // columns: C = Bh * tmp
    CoeffMatrix out(w, h);
    for (int u = 0; u < h; ++u) {
        const double* basis = &bh[static_cast<std::size_t>(u) * h];
        for (int k = 0; k < w; ++k) {
            double acc = 0.0;
            for (int r = 0; r < h; ++r) acc += basis[r] * tmp.at(r, k);
            out.at(u, k) = acc;
        }
    }
    return out;
}

DnsMap dns_at(const CoeffMatrix& coeffs, int center_r, int center_c, const FdnsParams& params) {
    params.validate();
    const int n_half = params.search_window / 2;
    const int m_half = params.neighborhood_window / 2;
    const int margin = n_half + m_half;
    if (center_r < margin || center_c < margin || center_r >= coeffs.height - margin ||
        center_c >= coeffs.width - margin)
        throw OutOfBounds("dns_at: window around center exceeds the matrix");

    DnsMap map(params.search_window);
    for (int di = -n_half; di <= n_half; ++di) {
        for (int dj = -n_half; dj <= n_half; ++dj) {
            if (di == 0 && dj == 0) continue; // self-distance stays zero
            double ssd = 0.0;
            for (int u = -m_half; u <= m_half; ++u) {
                for (int v = -m_half; v <= m_half; ++v) {
                    const double d = coeffs.at(center_r + u, center_c + v) -
                                     coeffs.at(center_r + di + u, center_c + dj + v);
                    ssd += d * d;
                }
            }
            map.at(di + n_half, dj + n_half) = std::sqrt(ssd);
        }
    }
    return map;
}

DnsMap fgns(const CoeffMatrix& coeffs, const FdnsParams& params) {
    params.validate();
    const int n_half = params.search_window / 2;
    const int m_half = params.neighborhood_window / 2;
    const int margin = n_half + m_half;
    const int min_dim = params.search_window + params.neighborhood_window - 1;
    if (coeffs.width < min_dim || coeffs.height < min_dim)
        throw InvalidInput("fgns: matrix smaller than the searching window plus neighborhood margin");

    const int w = coeffs.width, h = coeffs.height;
    const int c_rows = h - 2 * margin;
    const int c_cols = w - 2 * margin;
    const double count = static_cast<double>(c_rows) * c_cols;

    // One squared-difference plane per offset, box-reduced per center. Each map
    // cell is produced by a single row-major pass, independent of the others.
    DnsMap map(params.search_window);
    std::vector<double> plane(static_cast<std::size_t>(w) * h);
    for (int di = -n_half; di <= n_half; ++di) {
        for (int dj = -n_half; dj <= n_half; ++dj) {
            if (di == 0 && dj == 0) continue;
            const int r0 = std::max(0, -di), r1 = h - 1 - std::max(0, di);
            const int c0 = std::max(0, -dj), c1 = w - 1 - std::max(0, dj);
            for (int r = r0; r <= r1; ++r) {
                const double* a = &coeffs.values[static_cast<std::size_t>(r) * w];
                const double* b = &coeffs.values[static_cast<std::size_t>(r + di) * w + dj];
                double* p = &plane[static_cast<std::size_t>(r) * w];
                for (int c = c0; c <= c1; ++c) {
                    const double d = a[c] - b[c];
                    p[c] = d * d;
                }
            }
            double acc = 0.0;
            for (int r = margin; r < h - margin; ++r) {
                for (int c = margin; c < w - margin; ++c) {
                    double ssd = 0.0;
                    for (int u = -m_half; u <= m_half; ++u) {
                        const double* p = &plane[static_cast<std::size_t>(r + u) * w];
                        for (int v = -m_half; v <= m_half; ++v) ssd += p[c + v];
                    }
                    acc += std::sqrt(ssd);
                }
            }
            map.at(di + n_half, dj + n_half) = acc / count;
        }
    }
    return map;
}

HashVector extract_hash(const DnsMap& map, const FdnsParams& params) {
    if (params.search_window != 9 || map.n != 9)
        throw UnsupportedParameter("extract_hash: hash length is fixed at 64, which requires N = 9");
    HashVector hash;
    hash.params_fingerprint = params.fingerprint();
    for (int i = 1; i < 9; ++i)
        for (int j = 1; j < 9; ++j) hash.values[static_cast<std::size_t>(i - 1) * 8 + (j - 1)] = map.at(i, j);
    return hash;
}

HashVector hash_image(const GrayImage& img, const FdnsParams& params) {
    params.validate();
    if (img.empty()) throw InvalidInput("hash_image: empty image");
    GrayImage canonical = resize_bilinear(img, params.canonical_w, params.canonical_h);
    canonical = gaussian_smooth(canonical, params.gaussian_kernel, params.gaussian_sigma);
    const CoeffMatrix coeffs = dct2(canonical);
    return extract_hash(fgns(coeffs, params), params);
}

HashVector hash_image(const RgbImage& img, const FdnsParams& params) {
    return hash_image(to_grayscale(img), params);
}

double correlation(const HashVector& a, const HashVector& b) {
    if (a.params_fingerprint != b.params_fingerprint)
        throw IncompatibleHash("correlation: hashes were produced under different parameters");

    const std::size_t n = a.values.size();
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_a += a.values[i];
        mean_b += b.values[i];
    }
    mean_a /= static_cast<double>(n);
    mean_b /= static_cast<double>(n);

    double var_a = 0.0, var_b = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a.values[i] - mean_a;
        const double db = b.values[i] - mean_b;
        var_a += da * da;
        var_b += db * db;
        cov += da * db;
    }
    var_a /= static_cast<double>(n);
    var_b /= static_cast<double>(n);

    const bool degen_a = var_a < 1e-12;
    const bool degen_b = var_b < 1e-12;
    if (degen_a && degen_b) {
        double max_diff = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            max_diff = std::max(max_diff, std::fabs(a.values[i] - b.values[i]));
        return max_diff < 1e-9 ? 1.0 : 0.0;
    }
    if (degen_a || degen_b) return 0.0;

    const double r = cov / std::sqrt(var_a * var_b) / static_cast<double>(n);
    return r < -1.0 ? -1.0 : (r > 1.0 ? 1.0 : r);
}

} // namespace fdns
