#include "cpd/cpd.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cpd {

void CpdConfig::validate() const {
  if (kernel.size < 1) throw std::invalid_argument("kernel size must be >= 1");
  if (sigma < 0) throw std::invalid_argument("sigma must be >= 0");
  if (p_cpd < 0.0 || p_cpd > 1.0)
    throw std::invalid_argument("p_cpd must be in [0,1]");
}

CpdConfig parse_triple(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("expected KERNEL-SIZE-SIGMA, got '" +
                                 std::string(text) + "'");
  };
  const std::size_t d1 = text.find('-');
  if (d1 == std::string_view::npos) throw bad();
  const std::size_t d2 = text.find('-', d1 + 1);
  if (d2 == std::string_view::npos) throw bad();

  CpdConfig cfg;
  cfg.kernel.shape = parse_kernel_shape(text.substr(0, d1));

  const std::string_view size_part = text.substr(d1 + 1, d2 - d1 - 1);
  int size = 0;
  const auto [sp, sec] =
      std::from_chars(size_part.data(), size_part.data() + size_part.size(), size);
  if (sec != std::errc{} || sp != size_part.data() + size_part.size() || size < 1)
    throw bad();
  cfg.kernel.size = size;

  const std::string sigma_part(text.substr(d2 + 1));
  try {
    std::size_t used = 0;
    cfg.sigma = std::stod(sigma_part, &used);
    if (used != sigma_part.size()) throw bad();
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
  if (cfg.sigma < 0) throw std::invalid_argument("sigma must be >= 0");
  return cfg;
}

std::string triple_string(const CpdConfig& cfg) {
  std::ostringstream os;
  switch (cfg.kernel.shape) {
    case KernelShape::Cross: os << "DILATE"; break;
    case KernelShape::Rect: os << "RECT"; break;
    case KernelShape::Open: os << "OPEN"; break;
  }
  os << '-' << cfg.kernel.size << '-' << cfg.sigma;
  return os.str();
}

CopyResult copy_step(const RasterImage& x_src, const BinaryMask& m_src,
                     const StructuringElement& element) {
  CopyResult result;
  result.dilated_mask = dilate(m_src, element);
  result.object = ew_mul(x_src, result.dilated_mask);
  return result;
}

BinaryMask synthesize_mask(const BinaryMask& m_tar, const BinaryMask& dilated,
                           const BinaryMask& m_src) {
  const float inf = std::numeric_limits<float>::infinity();
  // min(max(m_tar - dilated, 0) + m_src, 1); the max absorbs the -1 case
  // (dilated area over target background), the min the 2 case (overlapping
  // malignancies).
  SignedMask wiped = clamp(ew_sub(m_tar, dilated), 0.0f, inf);
  SignedMask merged = clamp(ew_add(wiped, m_src), -inf, 1.0f);
  return to_binary(merged);
}

RasterImage composite_image(const RasterImage& x_tar, const CopyResult& copy,
                            double sigma, bool exact_alpha) {
  const SoftMask alpha = gaussian_blur(lift(copy.dilated_mask), sigma);

  SoftMask wipe;
  if (exact_alpha) {
    wipe = SoftMask(alpha.width, alpha.height);
    for (std::size_t i = 0; i < alpha.data.size(); ++i)
      wipe.data[i] = 1.0f - alpha.data[i];
  } else {
    wipe = complement(copy.dilated_mask);
  }

  const RasterImage kept = ew_mul(x_tar, wipe);
  const RasterImage pasted = ew_mul(copy.object, alpha);
  return clamp(ew_add(kept, pasted), 0.0f, 1.0f);
}

PasteResult paste_step(const RasterImage& x_tar, const BinaryMask& m_tar,
                       const BinaryMask& m_src, const CopyResult& copy,
                       double sigma, bool exact_alpha) {
  PasteResult result;
  result.image = composite_image(x_tar, copy, sigma, exact_alpha);
  result.mask = synthesize_mask(m_tar, copy.dilated_mask, m_src);
  return result;
}

SamplePair cp_dilatation(const SamplePair& src, const SamplePair& tar,
                         const NaiveAugConfig& naive_cfg,
                         const CpdConfig& cpd_cfg, Rng& rng) {
  cpd_cfg.validate();
  check_pair(src);
  check_pair(tar);
  if (src.image.width != tar.image.width || src.image.height != tar.image.height)
    throw std::invalid_argument("cp_dilatation: source and target differ in size");

  const auto [aug_src, aug_tar] = apply_naive(src, tar, naive_cfg, rng);
  const StructuringElement element = make_element(cpd_cfg.kernel);
  const CopyResult copied = copy_step(aug_src.image, aug_src.mask, element);
  PasteResult pasted = paste_step(aug_tar.image, aug_tar.mask, aug_src.mask,
                                  copied, cpd_cfg.sigma, cpd_cfg.exact_alpha);

  SamplePair out;
  out.image = std::move(pasted.image);
  out.mask = std::move(pasted.mask);
  out.id = tar.id + "__cpd__" + src.id + "__" + std::to_string(rng.seed());
  out.patient_id = tar.patient_id;
  return out;
}

SamplePair maybe_augment(const SamplePair& src, const SamplePair& tar,
                         const NaiveAugConfig& naive_cfg,
                         const CpdConfig& cpd_cfg, Rng& rng) {
  cpd_cfg.validate();
  if (rng.uniform01() < cpd_cfg.p_cpd)
    return cp_dilatation(src, tar, naive_cfg, cpd_cfg, rng);
  return src;
}

}  // namespace cpd
