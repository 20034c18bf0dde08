#include "fisheyemc/color.hpp"

#include <algorithm>
#include <cmath>

namespace fmc {

namespace {

constexpr double kKr = 0.299;
constexpr double kKg = 0.587;
constexpr double kKb = 0.114;
constexpr double kCbScale = 1.772;  // 2 (1 - kKb)
constexpr double kCrScale = 1.402;  // 2 (1 - kKr)

uint8_t quantize(double v) {
    return static_cast<uint8_t>(std::clamp<long>(std::llround(v), 0, 255));
}

}  // namespace

Image8::Image8(int w, int h, int c) : width(w), height(h), channels(c) {
    if (w <= 0 || h <= 0 || (c != 1 && c != 3)) {
        throw InvalidArgument("image: invalid dimensions or channel count");
    }
    data.assign(static_cast<size_t>(w) * h * c, 0);
}

YuvImage420 rgb_to_yuv420(const Image8& rgb) {
    if (rgb.channels != 3) throw InvalidArgument("rgb_to_yuv420: input must have 3 channels");
    if (rgb.width % 2 != 0 || rgb.height % 2 != 0) {
        throw InvalidArgument("rgb_to_yuv420: dimensions must be even");
    }
    const int w = rgb.width, h = rgb.height;
    YuvImage420 out;
    out.width = w;
    out.height = h;
    out.y.resize(static_cast<size_t>(w) * h);
    out.u.resize(static_cast<size_t>(w / 2) * (h / 2));
    out.v.resize(static_cast<size_t>(w / 2) * (h / 2));

    std::vector<double> ecb(static_cast<size_t>(w) * h), ecr(static_cast<size_t>(w) * h);
    for (int yy = 0; yy < h; ++yy) {
        for (int xx = 0; xx < w; ++xx) {
            const size_t i = static_cast<size_t>(yy) * w + xx;
            const double r = rgb.data[i * 3 + 0] / 255.0;
            const double g = rgb.data[i * 3 + 1] / 255.0;
            const double b = rgb.data[i * 3 + 2] / 255.0;
            const double ey = kKr * r + kKg * g + kKb * b;
            ecb[i] = (b - ey) / kCbScale;
            ecr[i] = (r - ey) / kCrScale;
            out.y[i] = quantize(16.0 + 219.0 * ey);
        }
    }
    for (int yy = 0; yy < h / 2; ++yy) {
        for (int xx = 0; xx < w / 2; ++xx) {
            const size_t i00 = static_cast<size_t>(2 * yy) * w + 2 * xx;
            const size_t i10 = i00 + 1;
            const size_t i01 = i00 + w;
            const size_t i11 = i01 + 1;
            const double cb = 0.25 * (ecb[i00] + ecb[i10] + ecb[i01] + ecb[i11]);
            const double cr = 0.25 * (ecr[i00] + ecr[i10] + ecr[i01] + ecr[i11]);
            const size_t ci = static_cast<size_t>(yy) * (w / 2) + xx;
            out.u[ci] = quantize(128.0 + 224.0 * cb);
            out.v[ci] = quantize(128.0 + 224.0 * cr);
        }
    }
    return out;
}

Image8 yuv420_to_rgb(const YuvImage420& yuv) {
    const int w = yuv.width, h = yuv.height;
    if (w <= 0 || h <= 0 || w % 2 != 0 || h % 2 != 0) {
        throw InvalidArgument("yuv420_to_rgb: dimensions must be positive and even");
    }
    if (yuv.y.size() != static_cast<size_t>(w) * h ||
        yuv.u.size() != static_cast<size_t>(w / 2) * (h / 2) || yuv.u.size() != yuv.v.size()) {
        throw InvalidArgument("yuv420_to_rgb: plane sizes do not match dimensions");
    }
    Image8 out(w, h, 3);
    for (int yy = 0; yy < h; ++yy) {
        for (int xx = 0; xx < w; ++xx) {
            const size_t i = static_cast<size_t>(yy) * w + xx;
            const size_t ci = static_cast<size_t>(yy / 2) * (w / 2) + xx / 2;
            const double ey = (yuv.y[i] - 16.0) / 219.0;
            const double ecb = (yuv.u[ci] - 128.0) / 224.0;
            const double ecr = (yuv.v[ci] - 128.0) / 224.0;
            const double dr = kCrScale * ecr;
            const double db = kCbScale * ecb;
            const double dg = -(kKb * db + kKr * dr) / kKg;

            // Largest chroma scale in [0, 1] keeping all channels in [0, 1];
            // scaling toward the luma axis leaves the luma itself intact.
            double s = 1.0;
            for (const double d : {dr, dg, db}) {
                if (ey + d > 1.0) s = std::min(s, (1.0 - ey) / d);
                if (ey + d < 0.0) s = std::min(s, (0.0 - ey) / d);
            }
            s = std::clamp(s, 0.0, 1.0);

            out.data[i * 3 + 0] = quantize(255.0 * (ey + s * dr));
            out.data[i * 3 + 1] = quantize(255.0 * (ey + s * dg));
            out.data[i * 3 + 2] = quantize(255.0 * (ey + s * db));
        }
    }
    return out;
}

Image8 to_gray(const Image8& img) {
    if (img.channels == 1) return img;
    if (img.channels != 3) throw InvalidArgument("to_gray: unsupported channel count");
    Image8 out(img.width, img.height, 1);
    const size_t n = static_cast<size_t>(img.width) * img.height;
    for (size_t i = 0; i < n; ++i) {
        const double y = kKr * img.data[i * 3] + kKg * img.data[i * 3 + 1] + kKb * img.data[i * 3 + 2];
        out.data[i] = quantize(y);
    }
    return out;
}

}  // namespace fmc
