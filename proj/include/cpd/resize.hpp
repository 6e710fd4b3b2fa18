#pragma once

#include "cpd/raster.hpp"

namespace cpd {

// Bilinear resampling with half-pixel centers: source coordinate of output
// pixel o is (o + 0.5) * in/out - 0.5, clamped to the valid range. Same-size
// calls return an exact copy.
RasterImage resize_bilinear(const RasterImage& img, int out_width, int out_height);

// Nearest-neighbor resampling on the same grid mapping; output stays binary.
BinaryMask resize_nearest(const BinaryMask& mask, int out_width, int out_height);

}  // namespace cpd
