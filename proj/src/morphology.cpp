#include "cpd/morphology.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace cpd {

KernelShape parse_kernel_shape(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "cross" || lower == "dilate") return KernelShape::Cross;
  if (lower == "rect" || lower == "rectangular") return KernelShape::Rect;
  if (lower == "open") return KernelShape::Open;
  throw std::invalid_argument("unknown kernel shape: " + std::string(name));
}

std::string kernel_shape_name(KernelShape shape) {
  switch (shape) {
    case KernelShape::Cross: return "cross";
    case KernelShape::Rect: return "rect";
    case KernelShape::Open: return "open";
  }
  return "?";
}

StructuringElement make_element(const KernelSpec& spec) {
  if (spec.size < 1) throw std::invalid_argument("kernel size must be >= 1");
  const int k = spec.size;
  StructuringElement e;
  e.size = k;
  e.anchor_row = k / 2;
  e.anchor_col = k / 2;
  e.cells.assign(static_cast<std::size_t>(k) * k, 0);

  switch (spec.shape) {
    case KernelShape::Cross:
      for (int i = 0; i < k; ++i) {
        e.cells[static_cast<std::size_t>(e.anchor_row) * k + i] = 1;
        e.cells[static_cast<std::size_t>(i) * k + e.anchor_col] = 1;
      }
      break;
    case KernelShape::Rect:
      std::fill(e.cells.begin(), e.cells.end(), std::uint8_t{1});
      break;
    case KernelShape::Open: {
      // Disk around the anchor-cell center, radius to the nearest box edge.
      const double radius =
          std::min(e.anchor_col, k - 1 - e.anchor_col) + 0.5;
      const double r2 = radius * radius;
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
          const double dy = r - e.anchor_row;
          const double dx = c - e.anchor_col;
          if (dx * dx + dy * dy <= r2)
            e.cells[static_cast<std::size_t>(r) * k + c] = 1;
        }
      }
      break;
    }
  }
  return e;
}

BinaryMask dilate(const BinaryMask& m, const StructuringElement& e) {
  // Offsets of set cells relative to the anchor.
  std::vector<std::pair<int, int>> offsets;
  offsets.reserve(e.cells.size());
  for (int r = 0; r < e.size; ++r)
    for (int c = 0; c < e.size; ++c)
      if (e.cell(r, c)) offsets.emplace_back(r - e.anchor_row, c - e.anchor_col);

  BinaryMask out(m.width, m.height);
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      if (m.at(y, x)) {  // anchor cell is set, so the pixel survives
        out.at(y, x) = 1;
        continue;
      }
      for (const auto& [dy, dx] : offsets) {
        const int ny = y + dy;
        const int nx = x + dx;
        if (ny < 0 || ny >= m.height || nx < 0 || nx >= m.width) continue;
        if (m.at(ny, nx)) {
          out.at(y, x) = 1;
          break;
        }
      }
    }
  }
  return out;
}

std::vector<double> gaussian_kernel(double sigma) {
  if (sigma < 0) throw std::invalid_argument("sigma must be >= 0");
  if (sigma == 0) return {1.0};
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    taps[i + radius] = w;
    sum += w;
  }
  for (double& w : taps) w /= sum;
  return taps;
}

SoftMask gaussian_blur(const SoftMask& m, double sigma) {
  if (sigma < 0) throw std::invalid_argument("sigma must be >= 0");
  if (sigma == 0) return m;

  const std::vector<double> taps = gaussian_kernel(sigma);
  const int radius = static_cast<int>(taps.size() / 2);
  const int w = m.width;
  const int h = m.height;

  SoftMask horiz(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int j = -radius; j <= radius; ++j) {
        const int sx = std::clamp(x + j, 0, w - 1);
        acc += taps[j + radius] * m.at(y, sx);
      }
      horiz.at(y, x) = static_cast<float>(acc);
    }
  }

  SoftMask out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int j = -radius; j <= radius; ++j) {
        const int sy = std::clamp(y + j, 0, h - 1);
        acc += taps[j + radius] * horiz.at(sy, x);
      }
      // Renormalization keeps acc within an ulp of [0,1]; pin it exactly.
      out.at(y, x) = static_cast<float>(std::clamp(acc, 0.0, 1.0));
    }
  }
  return out;
}

}  // namespace cpd
