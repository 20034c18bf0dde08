#pragma once

#include <cstdint>
#include <vector>

#include "fisheyemc/errors.hpp"

namespace fmc {

/// Interleaved 8-bit image; channels is 1 (gray) or 3 (RGB).
struct Image8 {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<uint8_t> data;

    Image8() = default;
    Image8(int w, int h, int c);
    size_t byte_count() const { return data.size(); }
};

/// Planar YUV 4:2:0, 8-bit: full-res Y plane, half-res U and V planes.
/// Requires even dimensions.
struct YuvImage420 {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> y, u, v;

    size_t byte_count() const { return y.size() + u.size() + v.size(); }
};

/// RGB -> YUV 4:2:0 with the BT.601 limited-range matrix; chroma is 2x2 box
/// averaged. Throws on odd dimensions or non-RGB input.
YuvImage420 rgb_to_yuv420(const Image8& rgb);

/// Inverse conversion; chroma is upsampled nearest-neighbor. Out-of-gamut
/// pixels are clipped by scaling the chroma contribution toward the luma
/// axis, which keeps the luma of the round trip within one code level.
Image8 yuv420_to_rgb(const YuvImage420& yuv);

/// Rec.601 full-range luma (identity on single-channel input).
Image8 to_gray(const Image8& img);

}  // namespace fmc
