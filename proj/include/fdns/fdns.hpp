#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fdns/image.hpp"

namespace fdns {

// All knobs of the hashing pipeline. Two hashes are comparable only when they
// were produced under the same fingerprint.
struct FdnsParams {
    int canonical_w = 256;
    int canonical_h = 256;
    int gaussian_kernel = 3;
    double gaussian_sigma = 1.0;
    int search_window = 9;      // N, odd, >= 3
    int neighborhood_window = 3; // M, odd, < N

    // Throws InvalidInput when a field is out of range or the combination
    // leaves no valid central pixel.
    void validate() const;

    std::uint64_t fingerprint() const;
    std::string fingerprint_hex() const;
};

// Output of the 2D DCT; same dimensions as the input image.
struct CoeffMatrix {
    int width = 0;
    int height = 0;
    std::vector<double> values; // row-major

    CoeffMatrix() = default;
    CoeffMatrix(int w, int h, double fill = 0.0)
        : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * width + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * width + c]; }
};

// N x N map of accumulated neighborhood dissimilarities. Entry (i, j) holds the
// Euclidean patch distance for searching-window offset (i - N/2, j - N/2); the
// center entry is exactly zero.
struct DnsMap {
    int n = 0;
    std::vector<double> values;

    DnsMap() = default;
    explicit DnsMap(int side) : n(side), values(static_cast<std::size_t>(side) * side, 0.0) {}

    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * n + j]; }
};

// The perceptual hash: 64 real values plus the fingerprint of the parameters
// that produced them.
struct HashVector {
    std::array<double, 64> values{};
    std::uint64_t params_fingerprint = 0;
};

// Orthonormal 2D DCT-II (rows then columns). Coefficient (0,0) equals
// sqrt(w*h) * mean(pixels) and total squared energy is preserved.
CoeffMatrix dct2(const GrayImage& img);

// Dissimilarity map of a single central pixel: for every searching-window
// offset, the Euclidean distance between the flattened M x M neighborhood of
// the center and the one at that offset. The full window plus neighborhood
// margin must fit inside the matrix.
DnsMap dns_at(const CoeffMatrix& coeffs, int center_r, int center_c, const FdnsParams& params);

// Mean of dns_at over every valid central pixel. Accumulates offset-major with
// a fixed center order, so the result is bit-stable across runs and thread
// counts.
DnsMap fgns(const CoeffMatrix& coeffs, const FdnsParams& params);

// Drops row 0 and column 0 of the 9x9 aggregate map and flattens the remaining
// 8x8 block row-major. Only N = 9 satisfies the fixed 64-value contract.
HashVector extract_hash(const DnsMap& map, const FdnsParams& params);

// Full pipeline: grayscale -> canonical resize -> Gaussian smoothing -> DCT ->
// neighborhood aggregation -> 64-value extraction.
HashVector hash_image(const GrayImage& img, const FdnsParams& params);
HashVector hash_image(const RgbImage& img, const FdnsParams& params);

// Pearson correlation of two hashes in [-1, 1]. Zero-variance hashes compare
// equal (1.0) only to hashes with elementwise-identical values; a degenerate
// and a non-degenerate hash score 0.0. Fingerprints must match.
double correlation(const HashVector& a, const HashVector& b);

} // namespace fdns
