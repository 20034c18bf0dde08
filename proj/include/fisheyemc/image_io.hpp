#pragma once

#include <string>

#include "fisheyemc/color.hpp"

namespace fmc {

/// Reads a PGM (P5), PPM (P6) or PNG file; the format is detected from the
/// magic bytes. 8-bit samples only; PNG alpha is stripped and palettes are
/// expanded. Throws IoError / ParseError.
Image8 read_image(const std::string& path);

/// Writes by extension: .pgm (1 channel), .ppm (3 channels), .png (either).
/// PGM/PPM round-trip losslessly; PNG preserves 8-bit samples exactly.
void write_image(const Image8& img, const std::string& path);

}  // namespace fmc
