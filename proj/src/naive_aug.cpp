#include "cpd/naive_aug.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cpd/resize.hpp"

namespace cpd {

void NaiveAugConfig::validate() const {
  if (p_aug < 0.0 || p_aug > 1.0)
    throw std::invalid_argument("p_aug must be in [0,1]");
  if (resize_pad_range.first > resize_pad_range.second ||
      contrast_range.first > contrast_range.second ||
      brightness_range.first > brightness_range.second)
    throw std::invalid_argument("augmentation range has lo > hi");
  if (resize_pad_range.first <= -1.0)
    throw std::invalid_argument("resize_pad lo must be > -1");
}

SamplePair vflip(const SamplePair& p) {
  check_pair(p);
  SamplePair out = p;
  const int w = p.image.width;
  const int h = p.image.height;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < 3; ++c) out.image.at(y, x, c) = p.image.at(h - 1 - y, x, c);
      out.mask.at(y, x) = p.mask.at(h - 1 - y, x);
    }
  }
  return out;
}

SamplePair hflip(const SamplePair& p) {
  check_pair(p);
  SamplePair out = p;
  const int w = p.image.width;
  const int h = p.image.height;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < 3; ++c) out.image.at(y, x, c) = p.image.at(y, w - 1 - x, c);
      out.mask.at(y, x) = p.mask.at(y, w - 1 - x);
    }
  }
  return out;
}

SamplePair rot90(const SamplePair& p, int quarter_turns) {
  check_pair(p);
  const int q = ((quarter_turns % 4) + 4) % 4;
  if (q == 0) return p;

  SamplePair out = p;
  const int w = p.image.width;
  const int h = p.image.height;
  const int ow = (q % 2 == 0) ? w : h;
  const int oh = (q % 2 == 0) ? h : w;
  out.image = RasterImage(ow, oh);
  out.mask = BinaryMask(ow, oh);

  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      int sy = 0, sx = 0;
      switch (q) {
        case 1: sy = x; sx = w - 1 - y; break;          // one turn CCW
        case 2: sy = h - 1 - y; sx = w - 1 - x; break;
        case 3: sy = h - 1 - x; sx = y; break;
      }
      for (int c = 0; c < 3; ++c) out.image.at(y, x, c) = p.image.at(sy, sx, c);
      out.mask.at(y, x) = p.mask.at(sy, sx);
    }
  }
  return out;
}

SamplePair resize_pad(const SamplePair& p, double scale_delta) {
  check_pair(p);
  const double s = 1.0 + scale_delta;
  if (s <= 0.0) throw std::invalid_argument("resize_pad: scale must be > 0");

  const int w = p.image.width;
  const int h = p.image.height;
  const int sw = std::max(1, static_cast<int>(std::lround(w * s)));
  const int sh = std::max(1, static_cast<int>(std::lround(h * s)));
  if (sw == w && sh == h) return p;

  const RasterImage scaled_img = resize_bilinear(p.image, sw, sh);
  const BinaryMask scaled_mask = resize_nearest(p.mask, sw, sh);

  SamplePair out = p;
  out.image = RasterImage(w, h, 0.0f);
  out.mask = BinaryMask(w, h, 0);

  // Per-axis: pad into the center when smaller, crop the center when larger.
  const int off_x = (sw - w) / 2;  // scaled-space offset when cropping
  const int off_y = (sh - h) / 2;
  const int pad_x = (w - sw) / 2;  // output-space offset when padding
  const int pad_y = (h - sh) / 2;

  for (int y = 0; y < std::min(h, sh); ++y) {
    const int oy = sh >= h ? y : y + pad_y;
    const int sy = sh >= h ? y + off_y : y;
    for (int x = 0; x < std::min(w, sw); ++x) {
      const int ox = sw >= w ? x : x + pad_x;
      const int sx = sw >= w ? x + off_x : x;
      for (int c = 0; c < 3; ++c) out.image.at(oy, ox, c) = scaled_img.at(sy, sx, c);
      out.mask.at(oy, ox) = scaled_mask.at(sy, sx);
    }
  }
  return out;
}

RasterImage adjust_contrast(const RasterImage& img, double factor) {
  if (factor == 1.0) return img;

  double mean[3] = {0.0, 0.0, 0.0};
  const std::size_t n = img.pixel_count();
  for (std::size_t p = 0; p < n; ++p)
    for (int c = 0; c < 3; ++c) mean[c] += img.data[p * 3 + c];
  for (double& m : mean) m /= static_cast<double>(n);

  RasterImage out(img.width, img.height);
  for (std::size_t p = 0; p < n; ++p) {
    for (int c = 0; c < 3; ++c) {
      const double v = mean[c] + factor * (img.data[p * 3 + c] - mean[c]);
      out.data[p * 3 + c] = static_cast<float>(std::clamp(v, 0.0, 1.0));
    }
  }
  return out;
}

RasterImage adjust_brightness(const RasterImage& img, double delta) {
  if (delta == 0.0) return img;
  RasterImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const double v = img.data[i] + delta;
    out.data[i] = static_cast<float>(std::clamp(v, 0.0, 1.0));
  }
  return out;
}

SamplePair apply_naive_single(const SamplePair& p, const NaiveAugConfig& cfg,
                              Rng& rng) {
  cfg.validate();
  check_pair(p);
  SamplePair out = p;

  if (rng.uniform01() < cfg.p_aug) out = hflip(out);
  if (rng.uniform01() < cfg.p_aug) out = vflip(out);
  if (rng.uniform01() < cfg.p_aug) {
    const int turns = 1 + static_cast<int>(rng.uniform_below(3));
    out = rot90(out, turns);
  }
  if (rng.uniform01() < cfg.p_aug) {
    const double factor =
        rng.uniform(cfg.contrast_range.first, cfg.contrast_range.second);
    out.image = adjust_contrast(out.image, factor);
  }
  if (rng.uniform01() < cfg.p_aug) {
    const double delta =
        rng.uniform(cfg.brightness_range.first, cfg.brightness_range.second);
    out.image = adjust_brightness(out.image, delta);
  }
  // RandomResizePad runs unconditionally (inclusion probability 1); the
  // draw is still consumed to keep the stream layout fixed.
  rng.uniform01();
  const double delta =
      rng.uniform(cfg.resize_pad_range.first, cfg.resize_pad_range.second);
  out = resize_pad(out, delta);

  return out;
}

std::pair<SamplePair, SamplePair> apply_naive(const SamplePair& src,
                                              const SamplePair& tar,
                                              const NaiveAugConfig& cfg,
                                              Rng& rng) {
  SamplePair src_out = apply_naive_single(src, cfg, rng);
  SamplePair tar_out = apply_naive_single(tar, cfg, rng);
  return {std::move(src_out), std::move(tar_out)};
}

}  // namespace cpd
