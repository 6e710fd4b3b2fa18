#include <doctest.h>

#include "cpd/cpd.hpp"
#include "support/oracles.hpp"

using namespace cpd;

namespace {

SamplePair random_pair(Rng& rng, int w, int h, const std::string& id) {
  SamplePair p;
  p.image = oracle::random_image(rng, w, h);
  p.mask = oracle::random_mask(rng, w, h, 0.25);
  p.id = id;
  p.patient_id = id;
  return p;
}

}  // namespace

TEST_CASE("configuration triples parse verbatim") {
  CpdConfig a = parse_triple("DILATE-10-0.4");
  CHECK(a.kernel.shape == KernelShape::Cross);
  CHECK(a.kernel.size == 10);
  CHECK(a.sigma == doctest::Approx(0.4));

  CpdConfig b = parse_triple("RECT-30-0.7");
  CHECK(b.kernel.shape == KernelShape::Rect);
  CHECK(b.kernel.size == 30);
  CHECK(b.sigma == doctest::Approx(0.7));

  CpdConfig c = parse_triple("OPEN-40-0.0");
  CHECK(c.kernel.shape == KernelShape::Open);
  CHECK(c.kernel.size == 40);
  CHECK(c.sigma == 0.0);

  CpdConfig d = parse_triple("rect-3-1.5");
  CHECK(d.kernel.shape == KernelShape::Rect);

  CHECK_THROWS_AS(parse_triple("RECT-30"), std::invalid_argument);
  CHECK_THROWS_AS(parse_triple("BLOB-30-0.7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_triple("RECT-0-0.7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_triple("RECT-x-0.7"), std::invalid_argument);
}

TEST_CASE("copy_step with an empty mask yields empty results") {
  Rng rng(401);
  RasterImage img = oracle::random_image(rng, 9, 9);
  BinaryMask empty(9, 9, 0);
  CopyResult copy = copy_step(img, empty, make_element({KernelShape::Rect, 3}));
  for (auto v : copy.dilated_mask.data) CHECK(v == 0);
  for (float v : copy.object.data) CHECK(v == 0.0f);
}

TEST_CASE("copy_step with a saturated mask copies the whole image") {
  Rng rng(402);
  RasterImage img = oracle::random_image(rng, 6, 6);
  BinaryMask full(6, 6, 1);
  CopyResult copy = copy_step(img, full, make_element({KernelShape::Cross, 5}));
  for (auto v : copy.dilated_mask.data) CHECK(v == 1);
  CHECK(copy.object.data == img.data);
}

TEST_CASE("copy_step footprint of a point is the cross of the element") {
  Rng rng(403);
  RasterImage img = oracle::random_image(rng, 11, 11);
  // Keep every intensity strictly positive so footprints show in the object.
  for (auto& v : img.data) v = 0.5f + v * 0.4f;
  BinaryMask m(11, 11, 0);
  m.at(5, 5) = 1;
  StructuringElement e = make_element({KernelShape::Cross, 5});
  CopyResult copy = copy_step(img, m, e);

  CHECK(copy.dilated_mask.data == oracle::dilate(m, e).data);
  int nonzero = 0;
  for (int y = 0; y < 11; ++y)
    for (int x = 0; x < 11; ++x) {
      const bool on_cross =
          (y == 5 && std::abs(x - 5) <= 2) || (x == 5 && std::abs(y - 5) <= 2);
      const bool lit = copy.object.at(y, x, 0) > 0.0f;
      CHECK(lit == on_cross);
      nonzero += lit;
    }
  CHECK(nonzero == 9);
}

TEST_CASE("object is zero wherever the dilated mask is zero") {
  Rng rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    RasterImage img = oracle::random_image(rng, 16, 16);
    BinaryMask m = oracle::random_mask(rng, 16, 16, 0.2);
    CopyResult copy = copy_step(img, m, make_element({KernelShape::Open, 4}));
    for (std::size_t p = 0; p < copy.dilated_mask.data.size(); ++p)
      if (!copy.dilated_mask.data[p])
        for (int c = 0; c < 3; ++c) CHECK(copy.object.data[p * 3 + c] == 0.0f);
  }
}

TEST_CASE("paste_step with an empty source is the identity on the target") {
  Rng rng(405);
  RasterImage x_tar = oracle::random_image(rng, 12, 12);
  BinaryMask m_tar = oracle::random_mask(rng, 12, 12, 0.3);
  CopyResult copy;
  copy.dilated_mask = BinaryMask(12, 12, 0);
  copy.object = RasterImage(12, 12, 0.0f);
  BinaryMask m_src(12, 12, 0);

  PasteResult out = paste_step(x_tar, m_tar, m_src, copy, 0.7);
  CHECK(out.image.data == x_tar.data);
  CHECK(out.mask.data == m_tar.data);
}

TEST_CASE("sigma 0 composites as a hard per-pixel select") {
  Rng rng(406);
  for (int trial = 0; trial < 50; ++trial) {
    RasterImage x_src = oracle::random_image(rng, 16, 16);
    RasterImage x_tar = oracle::random_image(rng, 16, 16);
    BinaryMask m_src = oracle::random_mask(rng, 16, 16, 0.25);
    CopyResult copy = copy_step(x_src, m_src, make_element({KernelShape::Rect, 3}));
    RasterImage x_new = composite_image(x_tar, copy, 0.0);
    RasterImage expected = oracle::select(copy.dilated_mask, x_src, x_tar);
    CHECK(x_new.data == expected.data);
  }
}

TEST_CASE("mask synthesis matches the hand-evaluated clamp cases") {
  // Covers both degeneracies: -1 (dilated area over target background) and
  // the overlap that would reach 2.
  BinaryMask m_tar(3, 1), dilated(3, 1), m_src(3, 1);
  m_tar.data = {1, 1, 0};
  dilated.data = {0, 1, 1};
  m_src.data = {0, 1, 0};
  BinaryMask m_new = synthesize_mask(m_tar, dilated, m_src);
  CHECK(m_new.data == std::vector<std::uint8_t>{1, 1, 0});
}

TEST_CASE("mask synthesis matches the scalar oracle and its invariants") {
  Rng rng(407);
  for (int trial = 0; trial < 300; ++trial) {
    BinaryMask m_src = oracle::random_mask(rng, 16, 16, 0.25);
    BinaryMask dilated = oracle::random_superset(rng, m_src, 0.25);
    BinaryMask m_tar = oracle::random_mask(rng, 16, 16, 0.35);
    BinaryMask m_new = synthesize_mask(m_tar, dilated, m_src);
    CHECK(m_new.data == oracle::synthesize_mask(m_tar, dilated, m_src).data);
    for (std::size_t i = 0; i < m_new.data.size(); ++i) {
      CHECK((m_new.data[i] == 0 || m_new.data[i] == 1));
      if (m_src.data[i]) CHECK(m_new.data[i] == 1);
      if (m_tar.data[i] && !dilated.data[i]) CHECK(m_new.data[i] == 1);
      if (dilated.data[i] && !m_src.data[i]) CHECK(m_new.data[i] == 0);
    }
  }
}

TEST_CASE("composite stays in range for positive sigma") {
  Rng rng(408);
  for (double sigma : {0.4, 1.0, 2.5}) {
    RasterImage x_src = oracle::random_image(rng, 20, 20);
    RasterImage x_tar = oracle::random_image(rng, 20, 20);
    BinaryMask m_src = oracle::random_mask(rng, 20, 20, 0.2);
    CopyResult copy = copy_step(x_src, m_src, make_element({KernelShape::Cross, 5}));
    for (bool exact_alpha : {false, true}) {
      RasterImage x_new = composite_image(x_tar, copy, sigma, exact_alpha);
      for (float v : x_new.data) {
        CHECK(v >= 0.0f);
        CHECK(v <= 1.0f);
      }
    }
  }
}

TEST_CASE("full pipeline equals the step-by-step composition") {
  Rng data_rng(409);
  SamplePair src = random_pair(data_rng, 8, 8, "src");
  SamplePair tar = random_pair(data_rng, 8, 8, "tar");
  NaiveAugConfig naive_cfg;
  CpdConfig cpd_cfg = parse_triple("DILATE-5-0.4");

  Rng lib_rng(55);
  SamplePair out = cp_dilatation(src, tar, naive_cfg, cpd_cfg, lib_rng);

  Rng manual_rng(55);
  auto [aug_src, aug_tar] = apply_naive(src, tar, naive_cfg, manual_rng);
  CopyResult copy =
      copy_step(aug_src.image, aug_src.mask, make_element(cpd_cfg.kernel));
  PasteResult pasted =
      paste_step(aug_tar.image, aug_tar.mask, aug_src.mask, copy, cpd_cfg.sigma);

  CHECK(out.image.data == pasted.image.data);
  CHECK(out.mask.data == pasted.mask.data);
  CHECK(out.id == "tar__cpd__src__55");
}

TEST_CASE("empty source plus no-op naive config returns the target pair") {
  Rng data_rng(410);
  SamplePair src = random_pair(data_rng, 10, 10, "src");
  src.mask = BinaryMask(10, 10, 0);
  SamplePair tar = random_pair(data_rng, 10, 10, "tar");

  Rng rng(9);
  SamplePair out = cp_dilatation(src, tar, NaiveAugConfig::disabled(),
                                 parse_triple("RECT-5-0.7"), rng);
  CHECK(out.image.data == tar.image.data);
  CHECK(out.mask.data == tar.mask.data);
}

TEST_CASE("cp_dilatation is deterministic for a fixed seed") {
  Rng data_rng(411);
  SamplePair src = random_pair(data_rng, 14, 14, "a");
  SamplePair tar = random_pair(data_rng, 14, 14, "b");
  NaiveAugConfig naive_cfg;
  CpdConfig cfg = parse_triple("DILATE-10-0.4");

  Rng r1(1234), r2(1234);
  SamplePair o1 = cp_dilatation(src, tar, naive_cfg, cfg, r1);
  SamplePair o2 = cp_dilatation(src, tar, naive_cfg, cfg, r2);
  CHECK(o1.image.data == o2.image.data);
  CHECK(o1.mask.data == o2.mask.data);
  CHECK(o1.id == o2.id);
}

TEST_CASE("mismatched source and target sizes are rejected") {
  Rng data_rng(412);
  SamplePair src = random_pair(data_rng, 8, 8, "a");
  SamplePair tar = random_pair(data_rng, 9, 9, "b");
  Rng rng(1);
  CHECK_THROWS_AS(
      cp_dilatation(src, tar, NaiveAugConfig::disabled(), CpdConfig{}, rng),
      std::invalid_argument);
}

TEST_CASE("maybe_augment honors the boundary probabilities") {
  Rng data_rng(413);
  SamplePair src = random_pair(data_rng, 8, 8, "src");
  SamplePair tar = random_pair(data_rng, 8, 8, "tar");
  NaiveAugConfig naive_cfg = NaiveAugConfig::disabled();

  CpdConfig never = parse_triple("RECT-3-0.0");
  never.p_cpd = 0.0;
  CpdConfig always = parse_triple("RECT-3-0.0");
  always.p_cpd = 1.0;

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng r1(seed), r2(seed);
    SamplePair n = maybe_augment(src, tar, naive_cfg, never, r1);
    CHECK(n.image.data == src.image.data);
    CHECK(n.id == src.id);
    SamplePair a = maybe_augment(src, tar, naive_cfg, always, r2);
    CHECK(a.id != src.id);  // synthesized pair carries a derived id
  }
}

TEST_CASE("exact-alpha mode changes only the seam region") {
  Rng rng(414);
  RasterImage x_src = oracle::random_image(rng, 24, 24);
  RasterImage x_tar = oracle::random_image(rng, 24, 24);
  BinaryMask m_src(24, 24, 0);
  for (int y = 9; y < 15; ++y)
    for (int x = 9; x < 15; ++x) m_src.at(y, x) = 1;
  CopyResult copy = copy_step(x_src, m_src, make_element({KernelShape::Rect, 3}));

  const double sigma = 1.0;
  RasterImage paper = composite_image(x_tar, copy, sigma, false);
  RasterImage exact = composite_image(x_tar, copy, sigma, true);
  const int radius = 3;  // ceil(3 * sigma)
  for (int y = 0; y < 24; ++y)
    for (int x = 0; x < 24; ++x) {
      // A pixel whose whole blur window shares its mask value sees an alpha
      // of exactly 0 or 1, so the two modes must agree there.
      bool uniform_window = true;
      for (int dy = -radius; dy <= radius && uniform_window; ++dy)
        for (int dx = -radius; dx <= radius && uniform_window; ++dx) {
          const int ny = std::clamp(y + dy, 0, 23);
          const int nx = std::clamp(x + dx, 0, 23);
          if (copy.dilated_mask.at(ny, nx) != copy.dilated_mask.at(y, x))
            uniform_window = false;
        }
      if (uniform_window)
        for (int c = 0; c < 3; ++c)
          CHECK(paper.at(y, x, c) == exact.at(y, x, c));
    }
}
