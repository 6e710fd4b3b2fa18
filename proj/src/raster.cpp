#include "cpd/raster.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cpd {

namespace {

void require_dims(int aw, int ah, int bw, int bh, const char* what) {
  if (aw != bw || ah != bh) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(aw) + "x" + std::to_string(ah) +
                                " vs " + std::to_string(bw) + "x" +
                                std::to_string(bh) + ")");
  }
}

}  // namespace

RasterImage ew_mul(const RasterImage& a, const RasterImage& b) {
  require_dims(a.width, a.height, b.width, b.height, "ew_mul");
  RasterImage out(a.width, a.height);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] * b.data[i];
  return out;
}

RasterImage ew_mul(const RasterImage& a, const SoftMask& m) {
  require_dims(a.width, a.height, m.width, m.height, "ew_mul");
  RasterImage out(a.width, a.height);
  for (std::size_t p = 0; p < m.data.size(); ++p) {
    const float w = m.data[p];
    out.data[p * 3 + 0] = a.data[p * 3 + 0] * w;
    out.data[p * 3 + 1] = a.data[p * 3 + 1] * w;
    out.data[p * 3 + 2] = a.data[p * 3 + 2] * w;
  }
  return out;
}

RasterImage ew_mul(const RasterImage& a, const BinaryMask& m) {
  require_dims(a.width, a.height, m.width, m.height, "ew_mul");
  RasterImage out(a.width, a.height);
  for (std::size_t p = 0; p < m.data.size(); ++p) {
    const float w = static_cast<float>(m.data[p]);
    out.data[p * 3 + 0] = a.data[p * 3 + 0] * w;
    out.data[p * 3 + 1] = a.data[p * 3 + 1] * w;
    out.data[p * 3 + 2] = a.data[p * 3 + 2] * w;
  }
  return out;
}

BinaryMask ew_mul(const BinaryMask& a, const BinaryMask& b) {
  require_dims(a.width, a.height, b.width, b.height, "ew_mul");
  BinaryMask out(a.width, a.height);
  for (std::size_t i = 0; i < a.data.size(); ++i)
    out.data[i] = static_cast<std::uint8_t>(a.data[i] & b.data[i]);
  return out;
}

RasterImage ew_add(const RasterImage& a, const RasterImage& b) {
  require_dims(a.width, a.height, b.width, b.height, "ew_add");
  RasterImage out(a.width, a.height);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] + b.data[i];
  return out;
}

RasterImage ew_sub(const RasterImage& a, const RasterImage& b) {
  require_dims(a.width, a.height, b.width, b.height, "ew_sub");
  RasterImage out(a.width, a.height);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] - b.data[i];
  return out;
}

SignedMask ew_sub(const BinaryMask& a, const BinaryMask& b) {
  require_dims(a.width, a.height, b.width, b.height, "ew_sub");
  SignedMask out(a.width, a.height);
  for (std::size_t i = 0; i < a.data.size(); ++i)
    out.data[i] = static_cast<float>(a.data[i]) - static_cast<float>(b.data[i]);
  return out;
}

SignedMask ew_add(const SignedMask& a, const BinaryMask& b) {
  require_dims(a.width, a.height, b.width, b.height, "ew_add");
  SignedMask out(a.width, a.height);
  for (std::size_t i = 0; i < a.data.size(); ++i)
    out.data[i] = a.data[i] + static_cast<float>(b.data[i]);
  return out;
}

RasterImage clamp(const RasterImage& a, float lo, float hi) {
  if (lo > hi) throw std::invalid_argument("clamp: lo > hi");
  RasterImage out(a.width, a.height);
  for (std::size_t i = 0; i < a.data.size(); ++i)
    out.data[i] = std::min(std::max(a.data[i], lo), hi);
  return out;
}

SignedMask clamp(const SignedMask& a, float lo, float hi) {
  if (lo > hi) throw std::invalid_argument("clamp: lo > hi");
  SignedMask out(a.width, a.height);
  for (std::size_t i = 0; i < a.data.size(); ++i)
    out.data[i] = std::min(std::max(a.data[i], lo), hi);
  return out;
}

SoftMask lift(const BinaryMask& m) {
  SoftMask out(m.width, m.height);
  for (std::size_t i = 0; i < m.data.size(); ++i)
    out.data[i] = static_cast<float>(m.data[i]);
  return out;
}

SoftMask complement(const BinaryMask& m) {
  SoftMask out(m.width, m.height);
  for (std::size_t i = 0; i < m.data.size(); ++i)
    out.data[i] = 1.0f - static_cast<float>(m.data[i]);
  return out;
}

BinaryMask to_binary(const SignedMask& a) {
  BinaryMask out(a.width, a.height);
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const float v = a.data[i];
    if (v != 0.0f && v != 1.0f)
      throw std::invalid_argument("to_binary: value " + std::to_string(v) +
                                  " is not 0 or 1");
    out.data[i] = static_cast<std::uint8_t>(v);
  }
  return out;
}

void check_pair(const SamplePair& p) {
  require_dims(p.image.width, p.image.height, p.mask.width, p.mask.height,
               "sample pair");
}

}  // namespace cpd
