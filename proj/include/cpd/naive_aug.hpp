#pragma once

#include <utility>

#include "cpd/raster.hpp"
#include "cpd/rng.hpp"

namespace cpd {

struct NaiveAugConfig {
  double p_aug = 0.33;
  std::pair<double, double> resize_pad_range{-0.9, 0.5};
  std::pair<double, double> contrast_range{0.8, 1.2};
  std::pair<double, double> brightness_range{-0.1, 0.1};

  // No-op configuration: nothing fires and the mandatory resize keeps
  // scale 1.
  static NaiveAugConfig disabled() {
    NaiveAugConfig cfg;
    cfg.p_aug = 0.0;
    cfg.resize_pad_range = {0.0, 0.0};
    return cfg;
  }

  void validate() const;
};

// Spatial transforms act on image and mask together; masks stay binary.
SamplePair vflip(const SamplePair& p);
SamplePair hflip(const SamplePair& p);

// Counterclockwise quarter turns in {0..3}; odd turns swap width/height.
SamplePair rot90(const SamplePair& p, int quarter_turns);

// Scale by s = 1 + scale_delta (image bilinear, mask nearest-neighbor), then
// zero-pad (s < 1) or center-crop (s > 1) back to the original size,
// per axis. Rejects s <= 0.
SamplePair resize_pad(const SamplePair& p, double scale_delta);

// Optical transforms touch only the image.
RasterImage adjust_contrast(const RasterImage& img, double factor);
RasterImage adjust_brightness(const RasterImage& img, double delta);

// One pair through the fixed order [hflip, vflip, rot90, contrast,
// brightness, resize_pad]. Per op: one inclusion draw (resize_pad at
// probability 1, the rest at p_aug), then one parameter draw if the op both
// fired and takes a parameter (rot90: quarter turns from {1,2,3}). The draw
// sequence is part of the reproducibility contract.
SamplePair apply_naive_single(const SamplePair& p, const NaiveAugConfig& cfg,
                              Rng& rng);

// Source first, then target, on the same stream; inclusion draws are
// independent between the two.
std::pair<SamplePair, SamplePair> apply_naive(const SamplePair& src,
                                              const SamplePair& tar,
                                              const NaiveAugConfig& cfg,
                                              Rng& rng);

}  // namespace cpd
