#pragma once

#include <filesystem>

#include "cpd/raster.hpp"

namespace cpd {

// 8-bit PNG I/O. Intensities map as v/255 on load and round(v*255) on save.
// Grayscale and palette images load as RGB; 16-bit files are rejected.
RasterImage read_image_png(const std::filesystem::path& path);

// Any nonzero byte (any channel) loads as foreground.
BinaryMask read_mask_png(const std::filesystem::path& path);

// Images persist as 8-bit RGB, masks as 8-bit grayscale {0,255}.
void write_image_png(const std::filesystem::path& path, const RasterImage& img);
void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask);

}  // namespace cpd
