#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdns/image.hpp"

namespace fdns {

enum class AttackKind {
    Brightness,
    Contrast,
    Gamma,
    SaltPepper,
    Speckle,
    GaussianFilter,
    Jpeg,
    Scaling,
    Rotation,
    Watermark,
};

const char* attack_kind_name(AttackKind kind);

// One content-preserving operation. Canonical text form is
// "kind:parameter[:seed]"; the seed is required for the stochastic kinds.
struct AttackSpec {
    AttackKind kind = AttackKind::Brightness;
    double parameter = 0.0;
    std::uint64_t seed = 0;

    // Throws ParseError on unknown kinds, out-of-range parameters, or a
    // missing/extra seed. The message names the offending token.
    static AttackSpec parse(const std::string& text);
    std::string text() const;
    bool stochastic() const { return kind == AttackKind::SaltPepper || kind == AttackKind::Speckle; }
};

// Pixelwise add, clamped. delta in [-64, 64].
GrayImage brightness(const GrayImage& img, double delta);

// p' = (p - 128) * (1 + delta/128) + 128, clamped. delta in [-64, 64].
GrayImage contrast(const GrayImage& img, double delta);

// p' = 255 * (p/255)^g. g in [0.5, 2.0].
GrayImage gamma_correct(const GrayImage& img, double g);

// Each pixel becomes 0 or 255 (equal odds) with the given probability.
// density in [0, 0.1]; the seed fully determines the output.
GrayImage salt_pepper(const GrayImage& img, double density, std::uint64_t seed);

// p' = p * (1 + n), n ~ Normal(0, variance), clamped. variance in [0, 0.05].
GrayImage speckle(const GrayImage& img, double variance, std::uint64_t seed);

// 3x3 Gaussian smoothing at the given sigma. sigma in (0, 2].
GrayImage gaussian_filter_attack(const GrayImage& img, double sigma);

// 8-bit grayscale JPEG encode/decode round trip. quality in [10, 100].
GrayImage jpeg_compress(const GrayImage& img, int quality);

// Bilinear resize to (round(w*ratio), round(h*ratio)). ratio in [0.5, 2.0].
GrayImage scale(const GrayImage& img, double ratio);

// Rotates about the image center (bilinear), then center-crops to the largest
// axis-aligned rectangle of the original aspect ratio that fits inside the
// rotated content, so no fill pixels survive. degrees in [-90, 90]; exact
// multiples of 90 reproduce the pixel grid without interpolation.
GrayImage rotate(const GrayImage& img, double degrees);

// Alpha-blends the built-in 48x16 text mark over the bottom-right corner.
// opacity in (0, 1].
GrayImage watermark(const GrayImage& img, double opacity);

// The built-in mark bitmap (values 0 or 255), row-major 48x16.
const GrayImage& watermark_mark();

GrayImage apply_attack(const GrayImage& img, const AttackSpec& spec);

// Benchmark grid used when no grid file is given: the conventional parameter
// sweeps for each operation.
std::vector<AttackSpec> default_grid();

// Subset with mild parameters only (|delta| <= 20, gamma in [0.75, 1.25],
// density/variance <= 0.01, sigma <= 1, quality >= 50, ratio in [0.5, 2],
// |degrees| <= 5, opacity <= 0.6).
std::vector<AttackSpec> mild_grid();

} // namespace fdns
