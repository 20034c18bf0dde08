#pragma once

#include <cstdint>
#include <vector>

#include "fisheyemc/errors.hpp"

namespace fmc {

/// Single-channel intensity frame. Samples are stored as doubles in the 0-255
/// range so sub-pixel interpolation results keep their fractional part.
class GrayFrame {
  public:
    GrayFrame() = default;
    GrayFrame(int width, int height, double fill = 0.0);
    GrayFrame(int width, int height, std::vector<double> samples);

    int width() const { return width_; }
    int height() const { return height_; }
    size_t pixel_count() const { return samples_.size(); }

    double at(int x, int y) const { return samples_[static_cast<size_t>(y) * width_ + x]; }
    double& at(int x, int y) { return samples_[static_cast<size_t>(y) * width_ + x]; }

    const std::vector<double>& samples() const { return samples_; }
    std::vector<double>& samples() { return samples_; }

    /// Bilinear sample at a continuous position; coordinates are clamped to
    /// the image so out-of-bounds reads replicate the nearest edge sample.
    double sample_bilinear_clamped(double u, double v) const;

    static GrayFrame from_u8(int width, int height, const uint8_t* data);
    std::vector<uint8_t> to_u8() const;

  private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> samples_;
};

/// Mean of squared sample differences over all pixels. Throws on dimension
/// mismatch.
double mse(const GrayFrame& a, const GrayFrame& b);

}  // namespace fmc
