#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cpd {

// H x W x 3 interleaved RGB raster. Intensities are normalized reals in
// [0,1]; 8-bit files convert as v/255 on load and round(v*255) on save.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // size == width * height * 3, row-major RGB

  RasterImage() = default;
  RasterImage(int w, int h, float fill = 0.0f)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, fill) {}

  float& at(int y, int x, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  float at(int y, int x, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }
};

// H x W plane with values in {0,1}.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // size == width * height, row-major

  BinaryMask() = default;
  BinaryMask(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t& at(int y, int x) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t at(int y, int x) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }
};

// H x W plane with values in [0,1]; holds blurred alphas.
struct SoftMask {
  int width = 0;
  int height = 0;
  std::vector<float> data;

  SoftMask() = default;
  SoftMask(int w, int h, float fill = 0.0f)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  float& at(int y, int x) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  float at(int y, int x) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
};

// Scratch plane for mask algebra. Values may leave [0,1] (nominally [-1,2])
// until a clamp restores them.
struct SignedMask {
  int width = 0;
  int height = 0;
  std::vector<float> data;

  SignedMask() = default;
  SignedMask(int w, int h, float fill = 0.0f)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}
};

// An (image, mask) unit flowing through the pipeline. Image and mask share
// dimensions; patient_id groups samples for leak-free splitting.
struct SamplePair {
  RasterImage image;
  BinaryMask mask;
  std::string id;
  std::string patient_id;
};

// Element-wise algebra. Every binary op rejects dimension mismatches with
// std::invalid_argument. Mask operands broadcast across the 3 channels.
RasterImage ew_mul(const RasterImage& a, const RasterImage& b);
RasterImage ew_mul(const RasterImage& a, const SoftMask& m);
RasterImage ew_mul(const RasterImage& a, const BinaryMask& m);
BinaryMask ew_mul(const BinaryMask& a, const BinaryMask& b);

// Sums and differences are returned unclamped; callers clamp where the
// algebra requires it.
RasterImage ew_add(const RasterImage& a, const RasterImage& b);
RasterImage ew_sub(const RasterImage& a, const RasterImage& b);
SignedMask ew_sub(const BinaryMask& a, const BinaryMask& b);
SignedMask ew_add(const SignedMask& a, const BinaryMask& b);

RasterImage clamp(const RasterImage& a, float lo, float hi);
SignedMask clamp(const SignedMask& a, float lo, float hi);

// {0,1} -> {0.0,1.0} and 1 - m lifts used by the paste algebra.
SoftMask lift(const BinaryMask& m);
SoftMask complement(const BinaryMask& m);

// Requires every value be exactly 0 or 1.
BinaryMask to_binary(const SignedMask& a);

void check_pair(const SamplePair& p);  // image/mask dimensions must match

}  // namespace cpd
