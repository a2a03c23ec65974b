#pragma once

#include <string>

#include "afb/core/image.hpp"

namespace afb::io {

/// 8-bit binary PPM (P6) / PGM (P5) are the frame and mask formats used
/// throughout: lossless, self-describing and trivially diffable.
/// Channel values are stored as v*255 rounded and loaded back as v/255.

RgbFrame read_ppm(const std::string& path);
void write_ppm(const std::string& path, const RgbFrame& frame);

GrayImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const GrayImage& image);

BinaryMask read_mask_pgm(const std::string& path);
void write_mask_pgm(const std::string& path, const BinaryMask& mask);

/// Quantize a channel value onto the 8-bit grid used by the file formats.
double quantize8(double v);

}  // namespace afb::io
