#include "cpd/resize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpd {

namespace {

void require_positive(int out_w, int out_h) {
  if (out_w < 1 || out_h < 1)
    throw std::invalid_argument("resize: output dimensions must be positive");
}

}  // namespace

RasterImage resize_bilinear(const RasterImage& img, int out_width, int out_height) {
  require_positive(out_width, out_height);
  if (out_width == img.width && out_height == img.height) return img;

  RasterImage out(out_width, out_height);
  const double sx = static_cast<double>(img.width) / out_width;
  const double sy = static_cast<double>(img.height) / out_height;

  for (int y = 0; y < out_height; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    fy = std::clamp(fy, 0.0, static_cast<double>(img.height - 1));
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double wy = fy - y0;

    for (int x = 0; x < out_width; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      fx = std::clamp(fx, 0.0, static_cast<double>(img.width - 1));
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double wx = fx - x0;

      for (int c = 0; c < 3; ++c) {
        const double top = img.at(y0, x0, c) * (1.0 - wx) + img.at(y0, x1, c) * wx;
        const double bot = img.at(y1, x0, c) * (1.0 - wx) + img.at(y1, x1, c) * wx;
        out.at(y, x, c) = static_cast<float>(top * (1.0 - wy) + bot * wy);
      }
    }
  }
  return out;
}

BinaryMask resize_nearest(const BinaryMask& mask, int out_width, int out_height) {
  require_positive(out_width, out_height);
  if (out_width == mask.width && out_height == mask.height) return mask;

  BinaryMask out(out_width, out_height);
  const double sx = static_cast<double>(mask.width) / out_width;
  const double sy = static_cast<double>(mask.height) / out_height;

  for (int y = 0; y < out_height; ++y) {
    const int src_y =
        std::clamp(static_cast<int>((y + 0.5) * sy), 0, mask.height - 1);
    for (int x = 0; x < out_width; ++x) {
      const int src_x =
          std::clamp(static_cast<int>((x + 0.5) * sx), 0, mask.width - 1);
      out.at(y, x) = mask.at(src_y, src_x) ? 1 : 0;
    }
  }
  return out;
}

}  // namespace cpd
