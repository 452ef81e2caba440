#include "fdns/imageio.hpp"

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include <jpeglib.h>
#include <png.h>

#include "fdns/errors.hpp"

namespace fdns {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw IoError("cannot open file: " + path);
    return f;
}

unsigned char quantize8(double v) {
    const long q = std::lround(v);
    return static_cast<unsigned char>(std::clamp(q, 0L, 255L));
}

// ---- PNG ----

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

// Decodes to 8-bit samples; channels is 1 (gray) or 3 (rgb).
void decode_png(std::FILE* fp, const std::string& path, std::vector<unsigned char>& samples,
                int& width, int& height, int& channels) {
    PngReader rd;
    rd.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!rd.png) throw IoError("png: allocation failure");
    rd.info = png_create_info_struct(rd.png);
    if (!rd.info) throw IoError("png: allocation failure");
    if (setjmp(png_jmpbuf(rd.png))) throw IoError("png: decode failed: " + path);

    png_init_io(rd.png, fp);
    png_read_info(rd.png, rd.info);

    const png_byte color_type = png_get_color_type(rd.png, rd.info);
    const png_byte bit_depth = png_get_bit_depth(rd.png, rd.info);

    if (bit_depth == 16) png_set_strip_16(rd.png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(rd.png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(rd.png);
    if (png_get_valid(rd.png, rd.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(rd.png);
    png_set_strip_alpha(rd.png);
    png_read_update_info(rd.png, rd.info);

    width = static_cast<int>(png_get_image_width(rd.png, rd.info));
    height = static_cast<int>(png_get_image_height(rd.png, rd.info));
    channels = png_get_channels(rd.png, rd.info);
    if (width <= 0 || height <= 0) throw IoError("png: zero-dimension image: " + path);
    if (channels != 1 && channels != 3) throw IoError("png: unsupported channel layout: " + path);

    const std::size_t stride = png_get_rowbytes(rd.png, rd.info);
    samples.resize(stride * height);
    std::vector<png_bytep> rows(height);
    for (int r = 0; r < height; ++r) rows[r] = samples.data() + stride * r;
    png_read_image(rd.png, rows.data());
    png_read_end(rd.png, nullptr);
}

void encode_png(const std::string& path, const unsigned char* samples, int width, int height,
                int channels) {
    FilePtr fp = open_file(path, "wb");
    PngWriter wr;
    wr.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!wr.png) throw IoError("png: allocation failure");
    wr.info = png_create_info_struct(wr.png);
    if (!wr.info) throw IoError("png: allocation failure");
    if (setjmp(png_jmpbuf(wr.png))) throw IoError("png: encode failed: " + path);

    png_init_io(wr.png, fp.get());
    png_set_IHDR(wr.png, wr.info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height),
                 8, channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(wr.png, wr.info);

    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    std::vector<png_bytep> rows(height);
    for (int r = 0; r < height; ++r)
        rows[r] = const_cast<png_bytep>(samples + stride * r);
    png_write_image(wr.png, rows.data());
    png_write_end(wr.png, nullptr);
}

// ---- JPEG ----

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(mgr->jump, 1);
}

// Decodes to 8-bit samples; channels is 1 or 3.
void decode_jpeg_stream(const unsigned char* data, std::size_t size, const std::string& what,
                        std::vector<unsigned char>& samples, int& width, int& height, int& channels) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw IoError("jpeg: decode failed: " + what);
    }
    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, const_cast<unsigned char*>(data), static_cast<unsigned long>(size));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = cinfo.jpeg_color_space == JCS_GRAYSCALE ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_start_decompress(&cinfo);

    width = static_cast<int>(cinfo.output_width);
    height = static_cast<int>(cinfo.output_height);
    channels = cinfo.output_components;
    if (width <= 0 || height <= 0 || (channels != 1 && channels != 3)) {
        jpeg_destroy_decompress(&cinfo);
        throw IoError("jpeg: unsupported image: " + what);
    }
    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    samples.resize(stride * height);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = samples.data() + stride * cinfo.output_scanline;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
}

std::vector<unsigned char> read_file(const std::string& path) {
    FilePtr fp = open_file(path, "rb");
    std::fseek(fp.get(), 0, SEEK_END);
    const long size = std::ftell(fp.get());
    if (size < 0) throw IoError("cannot read file: " + path);
    std::fseek(fp.get(), 0, SEEK_SET);
    std::vector<unsigned char> data(static_cast<std::size_t>(size));
    if (size > 0 && std::fread(data.data(), 1, data.size(), fp.get()) != data.size())
        throw IoError("cannot read file: " + path);
    return data;
}

bool is_png(const std::vector<unsigned char>& data) {
    static const unsigned char sig[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
    return data.size() >= 8 && std::memcmp(data.data(), sig, 8) == 0;
}

bool is_jpeg(const std::vector<unsigned char>& data) {
    return data.size() >= 3 && data[0] == 0xFF && data[1] == 0xD8 && data[2] == 0xFF;
}

void decode_any(const std::string& path, std::vector<unsigned char>& samples, int& width,
                int& height, int& channels) {
    const std::vector<unsigned char> data = read_file(path);
    if (is_png(data)) {
        FilePtr fp = open_file(path, "rb");
        decode_png(fp.get(), path, samples, width, height, channels);
    } else if (is_jpeg(data)) {
        decode_jpeg_stream(data.data(), data.size(), path, samples, width, height, channels);
    } else {
        throw IoError("unrecognized image format (expected PNG or JPEG): " + path);
    }
}

} // namespace

RgbImage load_rgb(const std::string& path) {
    std::vector<unsigned char> samples;
    int w = 0, h = 0, ch = 0;
    decode_any(path, samples, w, h, ch);
    RgbImage out(w, h);
    const std::size_t n = static_cast<std::size_t>(w) * h;
    if (ch == 3) {
        for (std::size_t i = 0; i < n * 3; ++i) out.pixels[i] = samples[i];
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            out.pixels[i * 3 + 0] = samples[i];
            out.pixels[i * 3 + 1] = samples[i];
            out.pixels[i * 3 + 2] = samples[i];
        }
    }
    return out;
}

GrayImage load_gray(const std::string& path) {
    std::vector<unsigned char> samples;
    int w = 0, h = 0, ch = 0;
    decode_any(path, samples, w, h, ch);
    if (ch == 1) {
        GrayImage out(w, h);
        const std::size_t n = static_cast<std::size_t>(w) * h;
        for (std::size_t i = 0; i < n; ++i) out.pixels[i] = samples[i];
        return out;
    }
    RgbImage rgb(w, h);
    const std::size_t n = static_cast<std::size_t>(w) * h * 3;
    for (std::size_t i = 0; i < n; ++i) rgb.pixels[i] = samples[i];
    return to_grayscale(rgb);
}

void save_png_gray(const GrayImage& img, const std::string& path) {
    if (img.empty()) throw InvalidInput("save_png_gray: empty image");
    std::vector<unsigned char> samples(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) samples[i] = quantize8(img.pixels[i]);
    encode_png(path, samples.data(), img.width, img.height, 1);
}

void save_png_rgb(const RgbImage& img, const std::string& path) {
    if (img.empty()) throw InvalidInput("save_png_rgb: empty image");
    std::vector<unsigned char> samples(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) samples[i] = quantize8(img.pixels[i]);
    encode_png(path, samples.data(), img.width, img.height, 3);
}

GrayImage jpeg_roundtrip_gray(const GrayImage& img, int quality) {
    if (img.empty()) throw InvalidInput("jpeg_roundtrip_gray: empty image");
    if (quality < 10 || quality > 100)
        throw InvalidInput("jpeg_roundtrip_gray: quality must be in [10, 100]");

    std::vector<unsigned char> raw(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) raw[i] = quantize8(img.pixels[i]);

    jpeg_compress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;
    unsigned char* buffer = nullptr;
    unsigned long buffer_size = 0;
    if (setjmp(err.jump)) {
        jpeg_destroy_compress(&cinfo);
        if (buffer) free(buffer);
        throw IoError("jpeg: encode failed");
    }
    jpeg_create_compress(&cinfo);
    jpeg_mem_dest(&cinfo, &buffer, &buffer_size);
    cinfo.image_width = static_cast<JDIMENSION>(img.width);
    cinfo.image_height = static_cast<JDIMENSION>(img.height);
    cinfo.input_components = 1;
    cinfo.in_color_space = JCS_GRAYSCALE;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    while (cinfo.next_scanline < cinfo.image_height) {
        JSAMPROW row = raw.data() + static_cast<std::size_t>(img.width) * cinfo.next_scanline;
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);

    std::vector<unsigned char> samples;
    int w = 0, h = 0, ch = 0;
    try {
        decode_jpeg_stream(buffer, buffer_size, "in-memory roundtrip", samples, w, h, ch);
    } catch (...) {
        free(buffer);
        throw;
    }
    free(buffer);
    if (w != img.width || h != img.height || ch != 1)
        throw IoError("jpeg: roundtrip changed image layout");

    GrayImage out(w, h);
    for (std::size_t i = 0; i < out.pixels.size(); ++i) out.pixels[i] = samples[i];
    return out;
}

bool has_image_extension(const std::string& path) {
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos) return false;
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == "png" || ext == "jpg" || ext == "jpeg";
}

} // namespace fdns
