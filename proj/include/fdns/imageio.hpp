#pragma once

#include <string>

#include "fdns/image.hpp"

namespace fdns {

// Decodes a PNG or JPEG file (detected by signature). Grayscale files are
// replicated into the three channels.
RgbImage load_rgb(const std::string& path);

// Decodes a PNG or JPEG file to luminance. Native grayscale files keep their
// samples untouched; color files go through to_grayscale.
GrayImage load_gray(const std::string& path);

// 8-bit PNG writers; values are rounded and clamped.
void save_png_gray(const GrayImage& img, const std::string& path);
void save_png_rgb(const RgbImage& img, const std::string& path);

// Quantizes to 8-bit, encodes as grayscale JPEG at the given quality in memory,
// and decodes the result back.
GrayImage jpeg_roundtrip_gray(const GrayImage& img, int quality);

// True for .png/.jpg/.jpeg (case-insensitive).
bool has_image_extension(const std::string& path);

} // namespace fdns
