#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cpd/raster.hpp"

namespace cpd {

enum class KernelShape { Cross, Rect, Open };

// "DILATE" is accepted as an alias for Cross, matching the configuration
// shorthand (e.g. DILATE-10-0.4).
KernelShape parse_kernel_shape(std::string_view name);
std::string kernel_shape_name(KernelShape shape);

struct KernelSpec {
  KernelShape shape = KernelShape::Cross;
  int size = 5;  // side length in pixels, >= 1
};

// k x k binary cells anchored at (k/2, k/2) (floor; well-defined for even
// sizes). The anchor cell is always set.
struct StructuringElement {
  int size = 0;
  int anchor_row = 0;
  int anchor_col = 0;
  std::vector<std::uint8_t> cells;  // row-major k*k

  std::uint8_t cell(int r, int c) const {
    return cells[static_cast<std::size_t>(r) * size + c];
  }
};

// Cross: anchor row and column. Rect: all ones. Open: cells whose center
// lies within the disk around the anchor-cell center that reaches the
// nearest box edge (the inscribed ellipse for odd sizes).
StructuringElement make_element(const KernelSpec& spec);

// out[p] = 1 iff some set cell of the element, anchored at p, covers a set
// input pixel. Out-of-bounds neighbors count as 0. Extensive: the anchor
// cell guarantees out >= m.
BinaryMask dilate(const BinaryMask& m, const StructuringElement& e);

// Truncated 1-D Gaussian taps for offsets -r..r with r = ceil(3*sigma),
// renormalized to sum 1. sigma == 0 yields the single tap {1}.
std::vector<double> gaussian_kernel(double sigma);

// Separable blur with edge-replicated borders. sigma == 0 returns the input
// unchanged. Rejects negative sigma.
SoftMask gaussian_blur(const SoftMask& m, double sigma);

}  // namespace cpd
