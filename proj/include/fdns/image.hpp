#pragma once

#include <vector>

namespace fdns {

// Single-channel luminance image, row-major, values in [0, 255].
// Pixel operations keep values finite and clamped to that range.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    double& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * width + c]; }
    double at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * width + c]; }
    bool empty() const { return width <= 0 || height <= 0; }
};

// Interleaved RGB, row-major, channel values in [0, 255].
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels; // 3 per pixel: r, g, b

    RgbImage() = default;
    RgbImage(int w, int h, double fill = 0.0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3, fill) {}

    double* px(int r, int c) { return &pixels[(static_cast<std::size_t>(r) * width + c) * 3]; }
    const double* px(int r, int c) const { return &pixels[(static_cast<std::size_t>(r) * width + c) * 3]; }
    bool empty() const { return width <= 0 || height <= 0; }
};

inline double clamp255(double v) { return v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v); }

// ITU-R BT.601 luma. Weights are applied as integer ratios (299/587/114 over
// 1000) so they sum to exactly 1.
GrayImage to_grayscale(const RgbImage& img);

// Bilinear resize with half-pixel sample centers and edge clamping.
// Target dimensions must be >= 2.
GrayImage resize_bilinear(const GrayImage& img, int out_w, int out_h);

// 2D convolution with a normalized Gaussian kernel; borders replicate the edge
// pixel. kernel_size must be odd (1 is the identity), sigma > 0.
GrayImage gaussian_smooth(const GrayImage& img, int kernel_size, double sigma);

} // namespace fdns
