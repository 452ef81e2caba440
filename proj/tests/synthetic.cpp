#include "synthetic.hpp"

#include <cmath>

namespace synthetic {

using fdns::GrayImage;

namespace {

constexpr double kPi = 3.14159265358979323846;

void fill_rect(GrayImage& img, int r0, int c0, int r1, int c1, double value) {
    for (int r = r0; r < r1; ++r)
        for (int c = c0; c < c1; ++c) img.at(r, c) = value;
}

// Rows of short dark dashes, mimicking text.
void text_block(GrayImage& img, int r0, int c0, int r1, int c1, double value, int line_step) {
    for (int r = r0; r + 2 < r1; r += line_step) {
        int c = c0;
        int word = 0;
        while (c < c1) {
            const int len = 8 + ((word * 7 + r) % 13);
            fill_rect(img, r, c, r + 2, std::min(c + len, c1), value);
            c += len + 4;
            ++word;
        }
    }
}

} // namespace

GrayImage radial_gradient(int w, int h, double cx, double cy, bool quadratic) {
    GrayImage img(w, h);
    const double rmax = std::sqrt(static_cast<double>(w) * w + static_cast<double>(h) * h) / 2.0;
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const double d = std::sqrt((c - cx) * (c - cx) + (r - cy) * (r - cy)) / rmax;
            const double t = quadratic ? d * d : d;
            img.at(r, c) = fdns::clamp255(255.0 * (1.0 - t));
        }
    }
    return img;
}

GrayImage checkerboard(int w, int h, int period, int phase_r, int phase_c) {
    GrayImage img(w, h);
    const int half = period / 2;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const bool on = (((r + phase_r) / half) + ((c + phase_c) / half)) % 2 == 0;
            img.at(r, c) = on ? 220.0 : 35.0;
        }
    return img;
}

GrayImage diagonal_stripes(int w, int h, double period) {
    GrayImage img(w, h);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const double t = std::sin(2.0 * kPi * (r + c) / period);
            img.at(r, c) = 127.5 + 100.0 * t;
        }
    return img;
}

GrayImage tilted_waves(int w, int h, double period) {
    GrayImage img(w, h);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const double phase = (c + 0.35 * r) / period;
            img.at(r, c) = 127.5 + 110.0 * std::sin(2.0 * kPi * phase) * (0.4 + 0.6 * r / h);
        }
    return img;
}

GrayImage rings(int w, int h, double period) {
    GrayImage img(w, h);
    const double cx = w / 2.0, cy = h / 2.0;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const double d = std::sqrt((c - cx) * (c - cx) + (r - cy) * (r - cy));
            img.at(r, c) = 127.5 + 110.0 * std::cos(2.0 * kPi * d / period);
        }
    return img;
}

GrayImage webpage_layout(int w, int h, int variant) {
    GrayImage img(w, h, variant == 2 ? 25.0 : 235.0);
    const double ink = variant == 2 ? 200.0 : 40.0;
    const double panel = variant == 2 ? 60.0 : 180.0;
    switch (variant) {
        case 0: // header + left nav + article text
            fill_rect(img, 0, 0, h / 6, w, panel);
            fill_rect(img, h / 6 + 6, 8, h / 6 + 18, w / 2, ink); // title bar
            fill_rect(img, h / 4, 0, h, w / 5, panel);
            text_block(img, h / 4 + 8, 8, h - 8, w / 5 - 8, ink, 10);
            text_block(img, h / 4 + 4, w / 5 + 12, h - 12, w - 12, ink, 7);
            break;
        case 1: // banner + two-column card grid
            fill_rect(img, 0, 0, h / 8, w, ink);
            for (int row = 0; row < 3; ++row) {
                const int top = h / 8 + 14 + row * (h / 4);
                fill_rect(img, top, 10, top + h / 5, w / 2 - 8, panel);
                fill_rect(img, top, w / 2 + 8, top + h / 5, w - 10, panel);
                text_block(img, top + 6, 16, top + h / 5 - 6, w / 2 - 16, ink, 8);
                text_block(img, top + 6, w / 2 + 14, top + h / 5 - 6, w - 18, ink, 8);
            }
            break;
        default: // dark theme, centered hero and footer columns
            fill_rect(img, h / 5, w / 6, 2 * h / 5, 5 * w / 6, panel);
            text_block(img, h / 5 + 8, w / 6 + 10, 2 * h / 5 - 8, 5 * w / 6 - 10, ink, 9);
            for (int col = 0; col < 3; ++col) {
                const int left = w / 8 + col * (w / 3);
                fill_rect(img, h / 2, left, h / 2 + 10, left + w / 5, panel);
                text_block(img, h / 2 + 18, left, h - 20, left + w / 5, panel, 11);
            }
            break;
    }
    return img;
}

std::vector<fdns::NamedImage> desk_corpus() {
    const int n = 256;
    std::vector<fdns::NamedImage> corpus;
    corpus.push_back({"radial-a.png", radial_gradient(n, n, 128.0, 128.0, false)});
    corpus.push_back({"radial-b.png", radial_gradient(n, n, 64.0, 180.0, true)});
    corpus.push_back({"checker-a.png", checkerboard(n, n, 32, 0, 0)});
    corpus.push_back({"checker-b.png", checkerboard(n, n, 32, 8, 8)});
    corpus.push_back({"stripes.png", diagonal_stripes(n, n, 36.0)});
    corpus.push_back({"waves.png", tilted_waves(n, n, 64.0)});
    corpus.push_back({"rings.png", rings(n, n, 40.0)});
    corpus.push_back({"page-a.png", webpage_layout(n, n, 0)});
    corpus.push_back({"page-b.png", webpage_layout(n, n, 1)});
    corpus.push_back({"page-c.png", webpage_layout(n, n, 2)});
    return corpus;
}

std::vector<fdns::AttackSpec> family_attacks() {
    const char* specs[] = {
        "brightness:10",     "brightness:-20",    "contrast:10",  "contrast:-20",
        "gamma:0.75",        "gamma:0.9",         "gamma:1.25",   "saltpepper:0.005:101",
        "saltpepper:0.01:102", "speckle:0.005:201", "speckle:0.01:202", "gaussian:0.5",
        "gaussian:1",        "jpeg:50",           "jpeg:70",      "jpeg:90",
        "scaling:0.75",      "scaling:1.5",       "rotation:1",   "rotation:-5",
    };
    std::vector<fdns::AttackSpec> grid;
    for (const char* s : specs) grid.push_back(fdns::AttackSpec::parse(s));
    return grid;
}

std::vector<LabeledImage> family_corpus() {
    const int n = 256;
    std::vector<fdns::NamedImage> bases;
    bases.push_back({"radial", radial_gradient(n, n, 128.0, 128.0, false)});
    bases.push_back({"checker", checkerboard(n, n, 32, 0, 0)});
    bases.push_back({"stripes", diagonal_stripes(n, n, 36.0)});
    bases.push_back({"page-a", webpage_layout(n, n, 0)});
    bases.push_back({"page-b", webpage_layout(n, n, 1)});

    const std::vector<fdns::AttackSpec> attacks = family_attacks();
    std::vector<LabeledImage> corpus;
    for (const auto& base : bases) {
        int k = 0;
        for (const auto& spec : attacks) {
            corpus.push_back({base.id, base.id + "/variant-" + std::to_string(k++) + ".png",
                              fdns::apply_attack(base.image, spec)});
        }
    }
    return corpus;
}

} // namespace synthetic
