#include "rawbench/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <vector>

namespace rawbench::io {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::vector<png_byte> interleave_rows(const QuantizedImage& img) {
    const auto h = img.height();
    const auto w = img.width();
    const int bytes = img.bit_depth() == 16 ? 2 : 1;
    std::vector<png_byte> buf(static_cast<std::size_t>(h) * w * 3 * bytes);
    std::size_t i = 0;
    for (Eigen::Index y = 0; y < h; ++y) {
        for (Eigen::Index x = 0; x < w; ++x) {
            for (int c = 0; c < 3; ++c) {
                const std::uint16_t v = img.channel(c)(y, x);
                if (bytes == 2) {
                    buf[i++] = static_cast<png_byte>(v >> 8);  // network byte order
                    buf[i++] = static_cast<png_byte>(v & 0xff);
                } else {
                    buf[i++] = static_cast<png_byte>(v & 0xff);
                }
            }
        }
    }
    return buf;
}

void write_png(const std::filesystem::path& path, const QuantizedImage& img) {
    FilePtr fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) throw std::runtime_error("cannot open for writing: " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw std::runtime_error("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("png write failed: " + path.string());
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
                 static_cast<png_uint_32>(img.height()), img.bit_depth(), PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_byte> buf = interleave_rows(img);
    const std::size_t stride = buf.size() / static_cast<std::size_t>(img.height());
    std::vector<png_bytep> rows(static_cast<std::size_t>(img.height()));
    for (std::size_t y = 0; y < rows.size(); ++y) rows[y] = buf.data() + y * stride;
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

QuantizedImage read_png(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.string().c_str(), "rb"));
    if (!fp) throw std::runtime_error("cannot open: " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw std::runtime_error("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("png read failed: " + path.string());
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int depth = png_get_bit_depth(png, info);
    const int color = png_get_color_type(png, info);
    if (color != PNG_COLOR_TYPE_RGB || (depth != 8 && depth != 16)) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("unsupported png layout (want 8/16-bit RGB)");
    }

    const std::size_t stride = static_cast<std::size_t>(w) * 3 * (depth == 16 ? 2 : 1);
    std::vector<png_byte> buf(stride * h);
    std::vector<png_bytep> rows(h);
    for (std::size_t y = 0; y < h; ++y) rows[y] = buf.data() + y * stride;
    png_read_image(png, rows.data());
    png_destroy_read_struct(&png, &info, nullptr);

    std::array<PlaneU16, 3> ch;
    for (int c = 0; c < 3; ++c) ch[c] = PlaneU16(h, w);
    std::size_t i = 0;
    for (png_uint_32 y = 0; y < h; ++y) {
        for (png_uint_32 x = 0; x < w; ++x) {
            for (int c = 0; c < 3; ++c) {
                if (depth == 16) {
                    ch[c](y, x) = static_cast<std::uint16_t>((buf[i] << 8) | buf[i + 1]);
                    i += 2;
                } else {
                    ch[c](y, x) = buf[i++];
                }
            }
        }
    }
    return QuantizedImage(std::move(ch), depth);
}

void write_ppm(const std::filesystem::path& path, const QuantizedImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "P6\n" << img.width() << ' ' << img.height() << "\n65535\n";
    for (Eigen::Index y = 0; y < img.height(); ++y) {
        for (Eigen::Index x = 0; x < img.width(); ++x) {
            for (int c = 0; c < 3; ++c) {
                const std::uint16_t v = img.channel(c)(y, x);
                out.put(static_cast<char>(v >> 8));
                out.put(static_cast<char>(v & 0xff));
            }
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

QuantizedImage read_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::string magic;
    long w = 0, h = 0, maxval = 0;
    in >> magic >> w >> h >> maxval;
    if (magic != "P6" || w <= 0 || h <= 0 || (maxval != 255 && maxval != 65535)) {
        throw std::runtime_error("unsupported ppm header");
    }
    in.get();  // single whitespace after maxval
    const int depth = maxval == 65535 ? 16 : 8;
    std::array<PlaneU16, 3> ch;
    for (int c = 0; c < 3; ++c) ch[c] = PlaneU16(h, w);
    for (long y = 0; y < h; ++y) {
        for (long x = 0; x < w; ++x) {
            for (int c = 0; c < 3; ++c) {
                if (depth == 16) {
                    const int hi = in.get(), lo = in.get();
                    if (lo < 0) throw std::runtime_error("truncated ppm payload");
                    ch[c](y, x) = static_cast<std::uint16_t>((hi << 8) | lo);
                } else {
                    const int v = in.get();
                    if (v < 0) throw std::runtime_error("truncated ppm payload");
                    ch[c](y, x) = static_cast<std::uint16_t>(v);
                }
            }
        }
    }
    return QuantizedImage(std::move(ch), depth);
}

}  // namespace

void write_image(const std::filesystem::path& path, const QuantizedImage& img,
                 ImageFormat format) {
    switch (format) {
        case ImageFormat::Png8:
            if (img.bit_depth() != 8) {
                throw std::invalid_argument("write_image: PNG-8 needs an 8-bit image");
            }
            write_png(path, img);
            return;
        case ImageFormat::Png16:
            if (img.bit_depth() != 16) {
                throw std::invalid_argument("write_image: PNG-16 needs a 16-bit image");
            }
            write_png(path, img);
            return;
        case ImageFormat::Ppm16:
            if (img.bit_depth() != 16) {
                throw std::invalid_argument("write_image: PPM-16 needs a 16-bit image");
            }
            write_ppm(path, img);
            return;
    }
    throw std::invalid_argument("write_image: unknown format");
}

QuantizedImage read_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    char sniff[2] = {0, 0};
    in.read(sniff, 2);
    in.close();
    if (sniff[0] == 'P' && sniff[1] == '6') return read_ppm(path);
    return read_png(path);
}

}  // namespace rawbench::io
