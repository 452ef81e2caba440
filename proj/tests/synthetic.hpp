#pragma once

// Deterministic structured test images: gradients, checkerboards, stripe and
// ring patterns, and webpage-like block layouts.

#include <string>
#include <vector>

#include "fdns/attacks.hpp"
#include "fdns/eval.hpp"
#include "fdns/image.hpp"

namespace synthetic {

fdns::GrayImage radial_gradient(int w, int h, double cx, double cy, bool quadratic);
fdns::GrayImage checkerboard(int w, int h, int period, int phase_r, int phase_c);
fdns::GrayImage diagonal_stripes(int w, int h, double period);
fdns::GrayImage tilted_waves(int w, int h, double period);
fdns::GrayImage rings(int w, int h, double period);
fdns::GrayImage webpage_layout(int w, int h, int variant); // 0, 1, 2

// The 10-image desk corpus used by the robustness tests (256x256 each).
std::vector<fdns::NamedImage> desk_corpus();

struct LabeledImage {
    std::string label;
    std::string id;
    fdns::GrayImage image;
};

// 5 template families x 20 mildly attacked variants each.
std::vector<LabeledImage> family_corpus();

// The 20 mild attacks used to derive the family variants.
std::vector<fdns::AttackSpec> family_attacks();

} // namespace synthetic
