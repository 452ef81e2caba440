#pragma once

// Test-only reference implementations. Everything here evaluates definitions
// directly (quartic DCT, patch-materializing distance loops) and must stay
// independent of the library's computation paths.

#include <cmath>
#include <numeric>
#include <vector>

#include "fdns/fdns.hpp"
#include "fdns/image.hpp"
#include "fdns/rng.hpp"

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// DCT-II straight from the definition, O(n^4).
inline fdns::CoeffMatrix dct2_direct(const fdns::GrayImage& img) {
    const int w = img.width, h = img.height;
    fdns::CoeffMatrix out(w, h);
    for (int u = 0; u < h; ++u) {
        for (int v = 0; v < w; ++v) {
            const double au = u == 0 ? std::sqrt(1.0 / h) : std::sqrt(2.0 / h);
            const double av = v == 0 ? std::sqrt(1.0 / w) : std::sqrt(2.0 / w);
            double acc = 0.0;
            for (int r = 0; r < h; ++r)
                for (int c = 0; c < w; ++c)
                    acc += img.at(r, c) * std::cos(kPi * (2 * r + 1) * u / (2.0 * h)) *
                           std::cos(kPi * (2 * c + 1) * v / (2.0 * w));
            out.at(u, v) = au * av * acc;
        }
    }
    return out;
}

// Patch-materializing distance map for one center.
inline fdns::DnsMap dns_at_direct(const fdns::CoeffMatrix& m, int cr, int cc, int n, int mm) {
    const int nh = n / 2, mh = mm / 2;
    fdns::DnsMap map(n);
    for (int di = -nh; di <= nh; ++di) {
        for (int dj = -nh; dj <= nh; ++dj) {
            std::vector<double> a, b;
            for (int u = -mh; u <= mh; ++u)
                for (int v = -mh; v <= mh; ++v) {
                    a.push_back(m.at(cr + u, cc + v));
                    b.push_back(m.at(cr + di + u, cc + dj + v));
                }
            double ssd = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) ssd += (a[i] - b[i]) * (a[i] - b[i]);
            map.at(di + nh, dj + nh) = std::sqrt(ssd);
        }
    }
    return map;
}

// Center-major accumulation; `order` (when given) permutes the center visit
// order to probe order independence.
inline fdns::DnsMap fgns_direct(const fdns::CoeffMatrix& m, int n, int mm,
                                const std::vector<int>* order = nullptr) {
    const int margin = n / 2 + mm / 2;
    const int rows = m.height - 2 * margin, cols = m.width - 2 * margin;
    std::vector<int> centers(static_cast<std::size_t>(rows) * cols);
    std::iota(centers.begin(), centers.end(), 0);
    if (order) centers = *order;

    fdns::DnsMap total(n);
    for (const int idx : centers) {
        const int cr = margin + idx / cols;
        const int cc = margin + idx % cols;
        const fdns::DnsMap one = dns_at_direct(m, cr, cc, n, mm);
        for (std::size_t k = 0; k < total.values.size(); ++k) total.values[k] += one.values[k];
    }
    const double count = static_cast<double>(rows) * cols;
    for (double& v : total.values) v /= count;
    return total;
}

// Plain Pearson formula over any two equal-length vectors.
inline double pearson_direct(const std::vector<double>& a, const std::vector<double>& b) {
    const double n = static_cast<double>(a.size());
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double va = 0, vb = 0, cov = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
        cov += (a[i] - ma) * (b[i] - mb);
    }
    return cov / std::sqrt(va * vb);
}

inline double psnr(const fdns::GrayImage& a, const fdns::GrayImage& b) {
    double mse = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const double d = a.pixels[i] - b.pixels[i];
        mse += d * d;
    }
    mse /= static_cast<double>(a.pixels.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

inline fdns::GrayImage random_image(int w, int h, std::uint64_t seed, double lo = 0.0,
                                    double hi = 255.0) {
    fdns::GrayImage img(w, h);
    fdns::Rng rng(seed);
    for (double& p : img.pixels) p = lo + (hi - lo) * rng.uniform();
    return img;
}

inline fdns::CoeffMatrix random_matrix(int w, int h, std::uint64_t seed, double lo = -255.0,
                                       double hi = 255.0) {
    fdns::CoeffMatrix m(w, h);
    fdns::Rng rng(seed);
    for (double& v : m.values) v = lo + (hi - lo) * rng.uniform();
    return m;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::fabs(a[i] - b[i]));
    return worst;
}

} // namespace oracle
