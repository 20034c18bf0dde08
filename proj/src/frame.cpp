#include "fisheyemc/frame.hpp"

#include <algorithm>
#include <cmath>

namespace fmc {

GrayFrame::GrayFrame(int width, int height, double fill) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) throw InvalidArgument("frame: size must be positive");
    samples_.assign(static_cast<size_t>(width) * height, fill);
}

GrayFrame::GrayFrame(int width, int height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
    if (width <= 0 || height <= 0) throw InvalidArgument("frame: size must be positive");
    if (samples_.size() != static_cast<size_t>(width) * height) {
        throw InvalidArgument("frame: sample count does not match dimensions");
    }
}

double GrayFrame::sample_bilinear_clamped(double u, double v) const {
    u = std::clamp(u, 0.0, static_cast<double>(width_ - 1));
    v = std::clamp(v, 0.0, static_cast<double>(height_ - 1));
    const int x0 = static_cast<int>(u);
    const int y0 = static_cast<int>(v);
    const int x1 = std::min(x0 + 1, width_ - 1);
    const int y1 = std::min(y0 + 1, height_ - 1);
    const double fx = u - x0;
    const double fy = v - y0;
    const double top = at(x0, y0) * (1.0 - fx) + at(x1, y0) * fx;
    const double bot = at(x0, y1) * (1.0 - fx) + at(x1, y1) * fx;
    return top * (1.0 - fy) + bot * fy;
}

GrayFrame GrayFrame::from_u8(int width, int height, const uint8_t* data) {
    GrayFrame f(width, height);
    const size_t n = f.pixel_count();
    for (size_t i = 0; i < n; ++i) f.samples_[i] = data[i];
    return f;
}

std::vector<uint8_t> GrayFrame::to_u8() const {
    std::vector<uint8_t> out(samples_.size());
    for (size_t i = 0; i < samples_.size(); ++i) {
        out[i] = static_cast<uint8_t>(std::clamp<long>(std::llround(samples_[i]), 0, 255));
    }
    return out;
}

double mse(const GrayFrame& a, const GrayFrame& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw InvalidArgument("mse: frame dimensions differ");
    }
    double acc = 0.0;
    const auto& sa = a.samples();
    const auto& sb = b.samples();
    for (size_t i = 0; i < sa.size(); ++i) {
        const double d = sa[i] - sb[i];
        acc += d * d;
    }
    return acc / static_cast<double>(sa.size());
}

}  // namespace fmc
