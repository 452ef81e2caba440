#include "fdns/attacks.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "fdns/errors.hpp"
#include "fdns/imageio.hpp"
#include "fdns/rng.hpp"

namespace fdns {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct KindInfo {
    AttackKind kind;
    const char* name;
    double min_param;
    double max_param;
    bool min_exclusive;
};

constexpr std::array<KindInfo, 10> kKinds{{
    {AttackKind::Brightness, "brightness", -64.0, 64.0, false},
    {AttackKind::Contrast, "contrast", -64.0, 64.0, false},
    {AttackKind::Gamma, "gamma", 0.5, 2.0, false},
    {AttackKind::SaltPepper, "saltpepper", 0.0, 0.1, false},
    {AttackKind::Speckle, "speckle", 0.0, 0.05, false},
    {AttackKind::GaussianFilter, "gaussian", 0.0, 2.0, true},
    {AttackKind::Jpeg, "jpeg", 10.0, 100.0, false},
    {AttackKind::Scaling, "scaling", 0.5, 2.0, false},
    {AttackKind::Rotation, "rotation", -90.0, 90.0, false},
    {AttackKind::Watermark, "watermark", 0.0, 1.0, true},
}};

const KindInfo& kind_info(AttackKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k;
    throw ParseError("unknown attack kind");
}

void check_range(const KindInfo& info, double parameter) {
    const bool below = info.min_exclusive ? parameter <= info.min_param : parameter < info.min_param;
    if (below || parameter > info.max_param || !std::isfinite(parameter)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "attack %s: parameter %g outside %c%g, %g]", info.name,
                      parameter, info.min_exclusive ? '(' : '[', info.min_param, info.max_param);
        throw ParseError(buf);
    }
}

std::string fmt_param(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

GrayImage map_pixels(const GrayImage& img, double (*fn)(double, double), double arg) {
    GrayImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        out.pixels[i] = clamp255(fn(img.pixels[i], arg));
    return out;
}

// 5x7 glyphs, one bit per pixel, columns left to right.
struct Glyph {
    char ch;
    std::array<std::uint8_t, 7> rows; // low 5 bits used, MSB = leftmost
};

constexpr std::array<Glyph, 4> kGlyphs{{
    {'F', {0b11111, 0b10000, 0b10000, 0b11110, 0b10000, 0b10000, 0b10000}},
    {'D', {0b11110, 0b10001, 0b10001, 0b10001, 0b10001, 0b10001, 0b11110}},
    {'N', {0b10001, 0b11001, 0b10101, 0b10011, 0b10001, 0b10001, 0b10001}},
    {'S', {0b01111, 0b10000, 0b10000, 0b01110, 0b00001, 0b00001, 0b11110}},
}};

GrayImage render_mark() {
    // "FDNS" in the 5x7 font at 2x scale, centered on a 48x16 black field.
    GrayImage mark(48, 16, 0.0);
    const char* text = "FDNS";
    const int scale = 2;
    const int text_w = (5 * 4 + 3) * scale; // glyphs plus 1-column gaps
    const int x_off = (48 - text_w) / 2;
    const int y_off = (16 - 7 * scale) / 2;
    int pen = x_off;
    for (const char* p = text; *p; ++p) {
        const Glyph* glyph = nullptr;
        for (const auto& g : kGlyphs)
            if (g.ch == *p) glyph = &g;
        for (int gr = 0; gr < 7; ++gr) {
            for (int gc = 0; gc < 5; ++gc) {
                if (!(glyph->rows[gr] & (1 << (4 - gc)))) continue;
                for (int sy = 0; sy < scale; ++sy)
                    for (int sx = 0; sx < scale; ++sx)
                        mark.at(y_off + gr * scale + sy, pen + gc * scale + sx) = 255.0;
            }
        }
        pen += 6 * scale;
    }
    return mark;
}

} // namespace

const char* attack_kind_name(AttackKind kind) { return kind_info(kind).name; }

AttackSpec AttackSpec::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = text.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, colon - start));
        start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw ParseError("attack spec '" + text + "' is not kind:parameter[:seed]");

    AttackSpec spec;
    bool known = false;
    for (const auto& k : kKinds) {
        if (parts[0] == k.name) {
            spec.kind = k.kind;
            known = true;
            break;
        }
    }
    if (!known) throw ParseError("unknown attack kind '" + parts[0] + "'");

    try {
        std::size_t used = 0;
        spec.parameter = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ParseError("attack spec '" + text + "': bad parameter '" + parts[1] + "'");
    }
    check_range(kind_info(spec.kind), spec.parameter);
    if (spec.kind == AttackKind::Jpeg && spec.parameter != std::floor(spec.parameter))
        throw ParseError("attack spec '" + text + "': jpeg quality must be an integer");

    if (parts.size() == 3) {
        if (!spec.stochastic())
            throw ParseError("attack spec '" + text + "': seed given for a deterministic kind");
        try {
            std::size_t used = 0;
            spec.seed = std::stoull(parts[2], &used);
            if (used != parts[2].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("attack spec '" + text + "': bad seed '" + parts[2] + "'");
        }
    } else if (spec.stochastic()) {
        throw ParseError("attack spec '" + text + "': " + parts[0] + " requires a seed");
    }
    return spec;
}

std::string AttackSpec::text() const {
    std::string s = attack_kind_name(kind);
    s += ':';
    s += fmt_param(parameter);
    if (stochastic()) {
        s += ':';
        s += std::to_string(seed);
    }
    return s;
}

GrayImage brightness(const GrayImage& img, double delta) {
    check_range(kind_info(AttackKind::Brightness), delta);
    return map_pixels(img, [](double p, double d) { return p + d; }, delta);
}

GrayImage contrast(const GrayImage& img, double delta) {
    check_range(kind_info(AttackKind::Contrast), delta);
    return map_pixels(
        img, [](double p, double d) { return (p - 128.0) * (1.0 + d / 128.0) + 128.0; }, delta);
}

GrayImage gamma_correct(const GrayImage& img, double g) {
    check_range(kind_info(AttackKind::Gamma), g);
    if (g == 1.0) return img; // keep the identity parameter bit-exact
    return map_pixels(img, [](double p, double gg) { return 255.0 * std::pow(p / 255.0, gg); }, g);
}

GrayImage salt_pepper(const GrayImage& img, double density, std::uint64_t seed) {
    check_range(kind_info(AttackKind::SaltPepper), density);
    GrayImage out = img;
    Rng rng(seed);
    for (double& p : out.pixels) {
        if (rng.uniform() < density) p = rng.uniform() < 0.5 ? 0.0 : 255.0;
    }
    return out;
}

GrayImage speckle(const GrayImage& img, double variance, std::uint64_t seed) {
    check_range(kind_info(AttackKind::Speckle), variance);
    GrayImage out(img.width, img.height);
    Rng rng(seed);
    const double stddev = std::sqrt(variance);
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        out.pixels[i] = clamp255(img.pixels[i] * (1.0 + rng.normal(stddev)));
    return out;
}

GrayImage gaussian_filter_attack(const GrayImage& img, double sigma) {
    check_range(kind_info(AttackKind::GaussianFilter), sigma);
    return gaussian_smooth(img, 3, sigma);
}

GrayImage jpeg_compress(const GrayImage& img, int quality) {
    check_range(kind_info(AttackKind::Jpeg), quality);
    return jpeg_roundtrip_gray(img, quality);
}

GrayImage scale(const GrayImage& img, double ratio) {
    check_range(kind_info(AttackKind::Scaling), ratio);
    const int out_w = static_cast<int>(std::lround(img.width * ratio));
    const int out_h = static_cast<int>(std::lround(img.height * ratio));
    return resize_bilinear(img, out_w, out_h);
}

GrayImage rotate(const GrayImage& img, double degrees) {
    check_range(kind_info(AttackKind::Rotation), degrees);
    if (img.empty()) throw InvalidInput("rotate: empty image");

    double c, s;
    if (degrees == 0.0) {
        c = 1.0;
        s = 0.0;
    } else if (degrees == 90.0 || degrees == -90.0) {
        c = 0.0;
        s = degrees > 0 ? 1.0 : -1.0;
    } else {
        const double rad = degrees * kPi / 180.0;
        c = std::cos(rad);
        s = std::sin(rad);
    }
    const double ca = std::fabs(c), sa = std::fabs(s);

    // Largest same-aspect rectangle of the pixel-center extent that stays
    // inside the rotated extent; sampling then never leaves the source grid.
    const double ew = img.width - 1, eh = img.height - 1;
    const double k = std::min(ew / (ew * ca + eh * sa), eh / (ew * sa + eh * ca));
    const int out_w = static_cast<int>(std::floor(ew * k)) + 1;
    const int out_h = static_cast<int>(std::floor(eh * k)) + 1;

    const double cx = ew / 2.0, cy = eh / 2.0;
    const double ox = (out_w - 1) / 2.0, oy = (out_h - 1) / 2.0;

    GrayImage out(out_w, out_h);
    for (int r = 0; r < out_h; ++r) {
        for (int col = 0; col < out_w; ++col) {
            // inverse mapping: output pixel -> source coordinates
            const double dx = col - ox, dy = r - oy;
            double fx = c * dx + s * dy + cx;
            double fy = -s * dx + c * dy + cy;
            fx = std::clamp(fx, 0.0, ew);
            fy = std::clamp(fy, 0.0, eh);
            const int x0 = static_cast<int>(fx);
            const int y0 = static_cast<int>(fy);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const int y1 = std::min(y0 + 1, img.height - 1);
            const double wx = fx - x0, wy = fy - y0;
            const double top = (1.0 - wx) * img.at(y0, x0) + wx * img.at(y0, x1);
            const double bot = (1.0 - wx) * img.at(y1, x0) + wx * img.at(y1, x1);
            out.at(r, col) = clamp255((1.0 - wy) * top + wy * bot);
        }
    }
    return out;
}

const GrayImage& watermark_mark() {
    static const GrayImage mark = render_mark();
    return mark;
}

GrayImage watermark(const GrayImage& img, double opacity) {
    check_range(kind_info(AttackKind::Watermark), opacity);
    const GrayImage& mark = watermark_mark();
    GrayImage out = img;
    const int r0 = std::max(0, img.height - mark.height);
    const int c0 = std::max(0, img.width - mark.width);
    for (int r = r0; r < img.height; ++r) {
        for (int c = c0; c < img.width; ++c) {
            const double m = mark.at(r - (img.height - mark.height), c - (img.width - mark.width));
            out.at(r, c) = clamp255((1.0 - opacity) * img.at(r, c) + opacity * m);
        }
    }
    return out;
}

GrayImage apply_attack(const GrayImage& img, const AttackSpec& spec) {
    switch (spec.kind) {
        case AttackKind::Brightness: return brightness(img, spec.parameter);
        case AttackKind::Contrast: return contrast(img, spec.parameter);
        case AttackKind::Gamma: return gamma_correct(img, spec.parameter);
        case AttackKind::SaltPepper: return salt_pepper(img, spec.parameter, spec.seed);
        case AttackKind::Speckle: return speckle(img, spec.parameter, spec.seed);
        case AttackKind::GaussianFilter: return gaussian_filter_attack(img, spec.parameter);
        case AttackKind::Jpeg: return jpeg_compress(img, static_cast<int>(spec.parameter));
        case AttackKind::Scaling: return scale(img, spec.parameter);
        case AttackKind::Rotation: return rotate(img, spec.parameter);
        case AttackKind::Watermark: return watermark(img, spec.parameter);
    }
    throw InvalidInput("apply_attack: unknown kind");
}

namespace {

void push(std::vector<AttackSpec>& grid, AttackKind kind, double parameter, std::uint64_t seed = 0) {
    AttackSpec spec;
    spec.kind = kind;
    spec.parameter = parameter;
    spec.seed = seed;
    grid.push_back(spec);
}

} // namespace

std::vector<AttackSpec> default_grid() {
    std::vector<AttackSpec> g;
    for (double d : {-20.0, -10.0, 10.0, 20.0}) push(g, AttackKind::Brightness, d);
    for (double d : {-20.0, -10.0, 10.0, 20.0}) push(g, AttackKind::Contrast, d);
    for (double v : {0.75, 0.9, 1.1, 1.25}) push(g, AttackKind::Gamma, v);
    {
        std::uint64_t seed = 11;
        for (double v : {0.001, 0.005, 0.01}) push(g, AttackKind::SaltPepper, v, seed++);
    }
    {
        std::uint64_t seed = 21;
        for (double v : {0.001, 0.005, 0.01}) push(g, AttackKind::Speckle, v, seed++);
    }
    for (double v : {0.5, 1.0}) push(g, AttackKind::GaussianFilter, v);
    for (double q : {30.0, 50.0, 70.0, 90.0}) push(g, AttackKind::Jpeg, q);
    for (double v : {0.5, 0.75, 1.5, 2.0}) push(g, AttackKind::Scaling, v);
    for (double v : {-90.0, -45.0, -10.0, -5.0, -1.0, 1.0, 5.0, 10.0, 45.0, 90.0})
        push(g, AttackKind::Rotation, v);
    for (double v : {0.3, 0.6}) push(g, AttackKind::Watermark, v);
    return g;
}

std::vector<AttackSpec> mild_grid() {
    std::vector<AttackSpec> g;
    for (double d : {-20.0, -10.0, 10.0, 20.0}) push(g, AttackKind::Brightness, d);
    for (double d : {-20.0, -10.0, 10.0, 20.0}) push(g, AttackKind::Contrast, d);
    for (double v : {0.75, 0.9, 1.1, 1.25}) push(g, AttackKind::Gamma, v);
    {
        std::uint64_t seed = 11;
        for (double v : {0.001, 0.005, 0.01}) push(g, AttackKind::SaltPepper, v, seed++);
    }
    {
        std::uint64_t seed = 21;
        for (double v : {0.001, 0.005, 0.01}) push(g, AttackKind::Speckle, v, seed++);
    }
    for (double v : {0.5, 1.0}) push(g, AttackKind::GaussianFilter, v);
    for (double q : {50.0, 70.0, 90.0}) push(g, AttackKind::Jpeg, q);
    for (double v : {0.5, 0.75, 1.5, 2.0}) push(g, AttackKind::Scaling, v);
    for (double v : {-5.0, -1.0, 1.0, 5.0}) push(g, AttackKind::Rotation, v);
    for (double v : {0.3, 0.6}) push(g, AttackKind::Watermark, v);
    return g;
}

} // namespace fdns
