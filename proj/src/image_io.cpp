#include "fisheyemc/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

namespace fmc {

namespace {

// --- PNM (PGM/PPM binary) ---

int pnm_next_token(std::istream& in, std::string& tok) {
    tok.clear();
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
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return tok.empty() ? EOF : 0;
}

int pnm_int(std::istream& in, const char* what) {
    std::string tok;
    if (pnm_next_token(in, tok) == EOF) throw ParseError(std::string("pnm: missing ") + what);
    try {
        size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw ParseError("");
        return v;
    } catch (...) {
        throw ParseError(std::string("pnm: invalid ") + what + " '" + tok + "'");
    }
}

Image8 read_pnm(std::istream& in, int channels) {
    const int w = pnm_int(in, "width");
    const int h = pnm_int(in, "height");
    const int maxval = pnm_int(in, "maxval");
    if (w <= 0 || h <= 0) throw ParseError("pnm: non-positive dimensions");
    if (maxval <= 0 || maxval > 255) {
        throw ParseError("pnm: only 8-bit files (maxval <= 255) are supported");
    }
    // Single whitespace byte separates the header from the raster.
    Image8 img(w, h, channels);
    in.read(reinterpret_cast<char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.data.size())) {
        throw ParseError("pnm: truncated raster data");
    }
    return img;
}

void write_pnm(const Image8& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << (img.channels == 1 ? "P5" : "P6") << "\n"
        << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size()));
    if (!out) throw IoError("write failed: " + path);
}

// --- PNG via libpng ---

struct PngReadCtx {
    png_structp png = nullptr;
    png_infop info = nullptr;
    FILE* fp = nullptr;
    ~PngReadCtx() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (fp) std::fclose(fp);
    }
};

Image8 read_png(const std::string& path) {
    PngReadCtx ctx;
    ctx.fp = std::fopen(path.c_str(), "rb");
    if (!ctx.fp) throw IoError("cannot open: " + path);
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw IoError("png: allocation failure");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw IoError("png: allocation failure");
    if (setjmp(png_jmpbuf(ctx.png))) {
        throw ParseError("png: failed to decode " + path);
    }
    png_init_io(ctx.png, ctx.fp);
    png_read_info(ctx.png, ctx.info);

    const png_uint_32 w = png_get_image_width(ctx.png, ctx.info);
    const png_uint_32 h = png_get_image_height(ctx.png, ctx.info);
    const int color_type = png_get_color_type(ctx.png, ctx.info);
    const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);

    if (bit_depth == 16) png_set_strip_16(ctx.png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(ctx.png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(ctx.png);
    if (png_get_valid(ctx.png, ctx.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(ctx.png);
    png_set_strip_alpha(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    const int out_channels = static_cast<int>(png_get_channels(ctx.png, ctx.info));
    if (out_channels != 1 && out_channels != 3) {
        throw ParseError("png: unsupported channel layout");
    }
    Image8 img(static_cast<int>(w), static_cast<int>(h), out_channels);
    std::vector<png_bytep> rows(h);
    const size_t stride = static_cast<size_t>(w) * out_channels;
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.data.data() + y * stride;
    png_read_image(ctx.png, rows.data());
    png_read_end(ctx.png, nullptr);
    return img;
}

struct PngWriteCtx {
    png_structp png = nullptr;
    png_infop info = nullptr;
    FILE* fp = nullptr;
    ~PngWriteCtx() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        if (fp) std::fclose(fp);
    }
};

void write_png(const Image8& img, const std::string& path) {
    PngWriteCtx ctx;
    ctx.fp = std::fopen(path.c_str(), "wb");
    if (!ctx.fp) throw IoError("cannot open for writing: " + path);
    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw IoError("png: allocation failure");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw IoError("png: allocation failure");
    if (setjmp(png_jmpbuf(ctx.png))) {
        throw IoError("png: failed to encode " + path);
    }
    png_init_io(ctx.png, ctx.fp);
    png_set_IHDR(ctx.png, ctx.info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8,
                 img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
    std::vector<png_bytep> rows(static_cast<size_t>(img.height));
    const size_t stride = static_cast<size_t>(img.width) * img.channels;
    for (int y = 0; y < img.height; ++y) {
        rows[static_cast<size_t>(y)] = const_cast<png_bytep>(img.data.data() + y * stride);
    }
    png_write_image(ctx.png, rows.data());
    png_write_end(ctx.png, nullptr);
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Image8 read_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2) throw ParseError("unrecognized image file (too short): " + path);
    if (magic[0] == 'P' && magic[1] == '5') return read_pnm(in, 1);
    if (magic[0] == 'P' && magic[1] == '6') return read_pnm(in, 3);
    if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
        in.close();
        return read_png(path);
    }
    throw ParseError("unsupported image format (expect PGM/PPM/PNG): " + path);
}

void write_image(const Image8& img, const std::string& path) {
    if (img.width <= 0 || img.height <= 0 || img.data.empty()) {
        throw InvalidArgument("write_image: empty image");
    }
    if (ends_with(path, ".pgm")) {
        if (img.channels != 1) throw InvalidArgument("write_image: .pgm requires 1 channel");
        write_pnm(img, path);
    } else if (ends_with(path, ".ppm")) {
        if (img.channels != 3) throw InvalidArgument("write_image: .ppm requires 3 channels");
        write_pnm(img, path);
    } else if (ends_with(path, ".png")) {
        write_png(img, path);
    } else {
        throw InvalidArgument("write_image: unsupported extension (use .pgm/.ppm/.png): " + path);
    }
}

}  // namespace fmc
