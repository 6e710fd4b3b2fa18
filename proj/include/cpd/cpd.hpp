#pragma once

#include <string>
#include <string_view>

#include "cpd/morphology.hpp"
#include "cpd/naive_aug.hpp"
#include "cpd/raster.hpp"
#include "cpd/rng.hpp"

namespace cpd {

struct CpdConfig {
  KernelSpec kernel{KernelShape::Cross, 10};
  double sigma = 0.4;  // seam blur std-dev, pixels
  double p_cpd = 0.5;  // application probability in batch runs
  // Replaces the hard wipe (1 - M_srcD) with (1 - B(M_srcD)) so the two
  // alpha terms sum to 1 at the seam. Off by default.
  bool exact_alpha = false;

  void validate() const;
};

// KERNEL-SIZE-SIGMA shorthand, case-insensitive: DILATE-10-0.4, RECT-30-0.7,
// OPEN-40-0.0. DILATE names the cross kernel.
CpdConfig parse_triple(std::string_view text);
std::string triple_string(const CpdConfig& cfg);

struct CopyResult {
  BinaryMask dilated_mask;  // source mask grown by the structuring element
  RasterImage object;       // source image restricted to the dilated mask
};

// Dilates the source mask and cuts the object (malignancy plus margin
// context) out of the source image.
CopyResult copy_step(const RasterImage& x_src, const BinaryMask& m_src,
                     const StructuringElement& element);

// Mask synthesis: min(max(m_tar - dilated, 0) + m_src, 1). The dilated
// margin carries image context only; the annotation keeps the un-dilated
// source mask.
BinaryMask synthesize_mask(const BinaryMask& m_tar, const BinaryMask& dilated,
                           const BinaryMask& m_src);

// Image synthesis: (1 - dilated) * x_tar + blur(dilated, sigma) * object,
// clamped to [0,1]. sigma == 0 degenerates to a hard per-pixel select.
RasterImage composite_image(const RasterImage& x_tar, const CopyResult& copy,
                            double sigma, bool exact_alpha = false);

struct PasteResult {
  RasterImage image;
  BinaryMask mask;
};

// m_src is the un-dilated source mask paired with copy.dilated_mask.
PasteResult paste_step(const RasterImage& x_tar, const BinaryMask& m_tar,
                       const BinaryMask& m_src, const CopyResult& copy,
                       double sigma, bool exact_alpha = false);

// Full pipeline: naive augmentation of both pairs, then copy, then paste.
// The output id is {tar_id}__cpd__{src_id}__{seed} with the stream's
// originating seed.
SamplePair cp_dilatation(const SamplePair& src, const SamplePair& tar,
                         const NaiveAugConfig& naive_cfg,
                         const CpdConfig& cpd_cfg, Rng& rng);

// With probability p_cpd runs cp_dilatation; otherwise returns src as-is.
SamplePair maybe_augment(const SamplePair& src, const SamplePair& tar,
                         const NaiveAugConfig& naive_cfg,
                         const CpdConfig& cpd_cfg, Rng& rng);

}  // namespace cpd
