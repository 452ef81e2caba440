#include "fdns/image.hpp"

#include <algorithm>
#include <cmath>

#include "fdns/errors.hpp"

namespace fdns {

GrayImage to_grayscale(const RgbImage& img) {
    if (img.empty()) throw InvalidInput("to_grayscale: empty image");
    GrayImage out(img.width, img.height);
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = &img.pixels[i * 3];
        out.pixels[i] = clamp255((299.0 * p[0] + 587.0 * p[1] + 114.0 * p[2]) / 1000.0);
    }
    return out;
}

GrayImage resize_bilinear(const GrayImage& img, int out_w, int out_h) {
    if (img.empty()) throw InvalidInput("resize_bilinear: empty image");
    if (out_w < 2 || out_h < 2) throw InvalidInput("resize_bilinear: target dimensions must be >= 2");

    GrayImage out(out_w, out_h);
    const double sx = static_cast<double>(img.width) / out_w;
    const double sy = static_cast<double>(img.height) / out_h;

    for (int r = 0; r < out_h; ++r) {
        double fy = (r + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(img.height - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, img.height - 1);
        const double wy = fy - y0;
        for (int c = 0; c < out_w; ++c) {
            double fx = (c + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(img.width - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const double wx = fx - x0;
            const double top = (1.0 - wx) * img.at(y0, x0) + wx * img.at(y0, x1);
            const double bot = (1.0 - wx) * img.at(y1, x0) + wx * img.at(y1, x1);
            out.at(r, c) = clamp255((1.0 - wy) * top + wy * bot);
        }
    }
    return out;
}

GrayImage gaussian_smooth(const GrayImage& img, int kernel_size, double sigma) {
    if (img.empty()) throw InvalidInput("gaussian_smooth: empty image");
    if (kernel_size < 1 || kernel_size % 2 == 0)
        throw InvalidInput("gaussian_smooth: kernel_size must be odd and >= 1");
    if (!(sigma > 0.0)) throw InvalidInput("gaussian_smooth: sigma must be positive");

    if (kernel_size == 1) return img; // 1x1 normalized kernel is the identity

    const int half = kernel_size / 2;
    std::vector<double> kernel(static_cast<std::size_t>(kernel_size) * kernel_size);
    double total = 0.0;
    for (int dy = -half; dy <= half; ++dy) {
        for (int dx = -half; dx <= half; ++dx) {
            const double w = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
            kernel[static_cast<std::size_t>(dy + half) * kernel_size + (dx + half)] = w;
            total += w;
        }
    }
    for (double& w : kernel) w /= total;

    GrayImage out(img.width, img.height);
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            double acc = 0.0;
            for (int dy = -half; dy <= half; ++dy) {
                const int y = std::clamp(r + dy, 0, img.height - 1);
                const double* krow = &kernel[static_cast<std::size_t>(dy + half) * kernel_size];
                for (int dx = -half; dx <= half; ++dx) {
                    const int x = std::clamp(c + dx, 0, img.width - 1);
                    acc += krow[dx + half] * img.at(y, x);
                }
            }
            out.at(r, c) = clamp255(acc);
        }
    }
    return out;
}

} // namespace fdns
