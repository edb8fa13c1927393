#include "slicmag/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

namespace slicmag {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

bool has_suffix(const std::string& s, const std::string& suf) {
    if (s.size() < suf.size()) return false;
    for (size_t i = 0; i < suf.size(); ++i) {
        char a = static_cast<char>(std::tolower(static_cast<unsigned char>(s[s.size() - suf.size() + i])));
        if (a != suf[i]) return false;
    }
    return true;
}

// ---- PNM (binary PPM/PGM) ----

int pnm_read_token(std::istream& in) {
    // Skips whitespace and '#' comments, returns a non-negative integer.
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c)) throw CorruptStreamError("PNM: malformed header");
    int value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 0x7FFFFF) throw CorruptStreamError("PNM: header value out of range");
        c = in.get();
    }
    if (c != EOF) in.unget();  // the caller consumes the single header terminator
    return value;
}

RasterImage load_pnm(std::istream& in, const std::string& path) {
    char magic[2];
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6'))
        throw UnsupportedFormatError(path + ": not a binary PGM/PPM file");
    const bool color = magic[1] == '6';
    const int w = pnm_read_token(in);
    const int h = pnm_read_token(in);
    const int maxval = pnm_read_token(in);
    if (w < 1 || h < 1) throw CorruptStreamError(path + ": invalid PNM dimensions");
    if (maxval > 255) throw UnsupportedBitDepthError(path + ": only 8-bit PNM supported");
    if (maxval < 1) throw CorruptStreamError(path + ": invalid PNM maxval");
    // Single whitespace byte separates header from raster.
    in.get();

    const size_t channels = color ? 3 : 1;
    std::vector<uint8_t> raw(static_cast<size_t>(w) * h * channels);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<size_t>(in.gcount()) != raw.size())
        throw CorruptStreamError(path + ": truncated PNM raster");

    if (!color) {
        return RasterImage({Plane(w, h, std::move(raw))}, ColorSpace::Gray);
    }
    Plane r(w, h), g(w, h), b(w, h);
    for (size_t i = 0; i < static_cast<size_t>(w) * h; ++i) {
        r.samples()[i] = raw[3 * i];
        g.samples()[i] = raw[3 * i + 1];
        b.samples()[i] = raw[3 * i + 2];
    }
    return RasterImage({std::move(r), std::move(g), std::move(b)}, ColorSpace::RGB);
}

void save_pnm(const RasterImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileAccessError(path + ": cannot open for writing");
    const bool color = img.space() == ColorSpace::RGB;
    out << (color ? "P6" : "P5") << ' ' << img.width() << ' ' << img.height() << " 255\n";
    if (color) {
        std::vector<uint8_t> row(static_cast<size_t>(img.width()) * 3);
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x) {
                row[3 * x] = img.plane(0).at(x, y);
                row[3 * x + 1] = img.plane(1).at(x, y);
                row[3 * x + 2] = img.plane(2).at(x, y);
            }
            out.write(reinterpret_cast<const char*>(row.data()),
                      static_cast<std::streamsize>(row.size()));
        }
    } else {
        out.write(reinterpret_cast<const char*>(img.plane(0).samples().data()),
                  static_cast<std::streamsize>(img.plane(0).samples().size()));
    }
    if (!out) throw FileAccessError(path + ": write failed");
}

// ---- PNG via libpng ----

void png_error_handler(png_structp png, png_const_charp msg) {
    throw CorruptStreamError(std::string("PNG: ") + msg);
}

void png_warning_handler(png_structp, png_const_charp) {}

RasterImage load_png(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw FileAccessError(path + ": cannot open");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                             png_error_handler, png_warning_handler);
    if (!png) throw IoError("PNG: failed to allocate read struct");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("PNG: failed to allocate info struct");
    }

    try {
        png_init_io(png, f.get());
        png_read_info(png, info);

        const png_uint_32 w = png_get_image_width(png, info);
        const png_uint_32 h = png_get_image_height(png, info);
        const int depth = png_get_bit_depth(png, info);
        const int ctype = png_get_color_type(png, info);

        if (depth == 16) {
            png_destroy_read_struct(&png, &info, nullptr);
            throw UnsupportedBitDepthError(path + ": 16-bit PNG not supported");
        }
        if (depth < 8) png_set_expand(png);
        if (ctype == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
        if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
        png_set_strip_alpha(png);
        png_read_update_info(png, info);

        const int channels = png_get_channels(png, info);
        std::vector<uint8_t> raw(static_cast<size_t>(w) * h * channels);
        std::vector<png_bytep> rows(h);
        for (png_uint_32 y = 0; y < h; ++y)
            rows[y] = raw.data() + static_cast<size_t>(y) * w * channels;
        png_read_image(png, rows.data());
        png_read_end(png, nullptr);
        png_destroy_read_struct(&png, &info, nullptr);

        const int iw = static_cast<int>(w), ih = static_cast<int>(h);
        if (channels == 1) {
            return RasterImage({Plane(iw, ih, std::move(raw))}, ColorSpace::Gray);
        }
        if (channels != 3)
            throw CorruptStreamError(path + ": unexpected channel count after transforms");
        Plane r(iw, ih), g(iw, ih), b(iw, ih);
        for (size_t i = 0; i < static_cast<size_t>(iw) * ih; ++i) {
            r.samples()[i] = raw[3 * i];
            g.samples()[i] = raw[3 * i + 1];
            b.samples()[i] = raw[3 * i + 2];
        }
        return RasterImage({std::move(r), std::move(g), std::move(b)}, ColorSpace::RGB);
    } catch (const UnsupportedBitDepthError&) {
        throw;
    } catch (...) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw;
    }
}

void save_png(const RasterImage& img, const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw FileAccessError(path + ": cannot open for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                              png_error_handler, png_warning_handler);
    if (!png) throw IoError("PNG: failed to allocate write struct");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("PNG: failed to allocate info struct");
    }

    const bool color = img.space() == ColorSpace::RGB;
    const int channels = color ? 3 : 1;
    try {
        png_init_io(png, f.get());
        png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
                     static_cast<png_uint_32>(img.height()), 8,
                     color ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
                     PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                     PNG_FILTER_TYPE_DEFAULT);
        png_write_info(png, info);

        std::vector<uint8_t> row(static_cast<size_t>(img.width()) * channels);
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x)
                for (int c = 0; c < channels; ++c)
                    row[static_cast<size_t>(x) * channels + c] = img.plane(c).at(x, y);
            png_write_row(png, row.data());
        }
        png_write_end(png, nullptr);
        png_destroy_write_struct(&png, &info);
    } catch (...) {
        png_destroy_write_struct(&png, &info);
        throw;
    }
}

}  // namespace

RasterImage load_image(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw FileAccessError(path + ": cannot open");
    unsigned char magic[8] = {};
    probe.read(reinterpret_cast<char*>(magic), 8);
    const std::streamsize got = probe.gcount();
    probe.close();

    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
    if (got >= 8 && std::memcmp(magic, png_sig, 8) == 0) return load_png(path);
    if (got >= 2 && magic[0] == 'P' && (magic[1] == '5' || magic[1] == '6')) {
        std::ifstream in(path, std::ios::binary);
        return load_pnm(in, path);
    }
    throw UnsupportedFormatError(path + ": not a PNG or binary PPM/PGM file");
}

void save_image(const RasterImage& img, const std::string& path) {
    if (img.space() == ColorSpace::YCbCr)
        throw std::invalid_argument("save_image: convert YCbCr to RGB before saving");
    if (has_suffix(path, ".png")) {
        save_png(img, path);
    } else if (has_suffix(path, ".ppm") || has_suffix(path, ".pgm") || has_suffix(path, ".pnm")) {
        save_pnm(img, path);
    } else {
        throw UnsupportedFormatError(path + ": unknown extension (use .png/.ppm/.pgm)");
    }
}

}  // namespace slicmag
