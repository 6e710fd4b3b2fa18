// Test-only reference implementations, kept independent of the library code
// paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cpd/morphology.hpp"
#include "cpd/raster.hpp"
#include "cpd/rng.hpp"

namespace oracle {

// Dilation as a plain max over the element neighborhood, no shortcuts.
inline cpd::BinaryMask dilate(const cpd::BinaryMask& m,
                              const cpd::StructuringElement& e) {
  cpd::BinaryMask out(m.width, m.height);
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      std::uint8_t v = 0;
      for (int r = 0; r < e.size; ++r) {
        for (int c = 0; c < e.size; ++c) {
          if (!e.cell(r, c)) continue;
          const int ny = y + (r - e.anchor_row);
          const int nx = x + (c - e.anchor_col);
          if (ny < 0 || ny >= m.height || nx < 0 || nx >= m.width) continue;
          v = std::max(v, m.at(ny, nx));
        }
      }
      out.at(y, x) = v;
    }
  }
  return out;
}

// Per-pixel integer evaluation of the mask synthesis rule
// min(max(t - d, 0) + s, 1).
inline cpd::BinaryMask synthesize_mask(const cpd::BinaryMask& m_tar,
                                       const cpd::BinaryMask& dilated,
                                       const cpd::BinaryMask& m_src) {
  cpd::BinaryMask out(m_tar.width, m_tar.height);
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    const int wiped = std::max(int(m_tar.data[i]) - int(dilated.data[i]), 0);
    out.data[i] = static_cast<std::uint8_t>(std::min(wiped + int(m_src.data[i]), 1));
  }
  return out;
}

// Hard per-pixel select between source and target, the sigma = 0 limit.
inline cpd::RasterImage select(const cpd::BinaryMask& dilated,
                               const cpd::RasterImage& x_src,
                               const cpd::RasterImage& x_tar) {
  cpd::RasterImage out(x_src.width, x_src.height);
  for (std::size_t p = 0; p < dilated.data.size(); ++p)
    for (int c = 0; c < 3; ++c)
      out.data[p * 3 + c] =
          dilated.data[p] ? x_src.data[p * 3 + c] : x_tar.data[p * 3 + c];
  return out;
}

// Analytic tap of the truncated renormalized 1-D Gaussian.
inline double gaussian_tap(double sigma, int offset) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  if (std::abs(offset) > radius) return 0.0;
  double norm = 0.0;
  for (int i = -radius; i <= radius; ++i)
    norm += std::exp(-(double(i) * i) / (2.0 * sigma * sigma));
  return std::exp(-(double(offset) * offset) / (2.0 * sigma * sigma)) / norm;
}

inline cpd::BinaryMask random_mask(cpd::Rng& rng, int w, int h,
                                   double density = 0.5) {
  cpd::BinaryMask m(w, h);
  for (auto& v : m.data) v = rng.uniform01() < density ? 1 : 0;
  return m;
}

inline cpd::RasterImage random_image(cpd::Rng& rng, int w, int h) {
  cpd::RasterImage img(w, h);
  // Quantized to byte levels so values survive PNG round trips exactly.
  for (auto& v : img.data)
    v = static_cast<float>(rng.uniform_below(256) / 255.0);
  return img;
}

// A superset of `base`: base plus extra random pixels.
inline cpd::BinaryMask random_superset(cpd::Rng& rng, const cpd::BinaryMask& base,
                                       double extra_density = 0.3) {
  cpd::BinaryMask out = base;
  for (auto& v : out.data)
    if (!v && rng.uniform01() < extra_density) v = 1;
  return out;
}

}  // namespace oracle
