#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cpd/raster.hpp"

namespace cpd {

enum class Split { Train, Val, Test, Unassigned };

std::string split_name(Split s);
Split parse_split(std::string_view name);

struct ManifestEntry {
  std::string id;
  std::string patient_id;
  std::string image_path;  // relative to the dataset root
  std::string mask_path;
  Split split = Split::Unassigned;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  std::array<double, 3> split_fractions{0.7, 0.15, 0.15};
  std::uint64_t seed = 0;
};

struct HsvPixel {
  double h = 0;  // degrees in [0,360)
  double s = 0;  // [0,255]
  double v = 0;  // [0,255]
};

// Non-overlapping grid tiling from the top-left; remainders smaller than
// patch_size are dropped. Patch ids are {base_id}_y{row}_x{col}.
std::vector<SamplePair> patchify(const RasterImage& wsi_image,
                                 const BinaryMask& wsi_mask, int patch_size,
                                 const std::string& base_id,
                                 const std::string& patient_id);

HsvPixel rgb_to_hsv(float r, float g, float b);

// True iff strictly more than `threshold` of the pixels fall inside the
// near-white HSV band (s <= 0.12*255, v >= 0.9*255; the hue bound [0,360]
// admits everything).
bool is_background(const RasterImage& patch, double threshold = 0.75);

// Patients are shuffled with the seed and assigned greedily to the split
// with the largest remaining patch-count capacity; no patient straddles
// splits, every split ends nonempty. Needs at least 3 distinct patients.
DatasetManifest split_by_patient(std::vector<ManifestEntry> entries,
                                 std::array<double, 3> fractions,
                                 std::uint64_t seed);

// Square inputs only; image bilinear, mask nearest-neighbor.
SamplePair resize_pair(const SamplePair& pair, int target);

SamplePair load_pair(const std::filesystem::path& image_path,
                     const std::filesystem::path& mask_path);

struct SavedPaths {
  std::filesystem::path image_path;
  std::filesystem::path mask_path;
};

// Writes {root}/images/{id}.png and {root}/masks/{id}.png, creating the
// directories as needed.
SavedPaths save_pair(const SamplePair& pair, const std::filesystem::path& root);

// Line-delimited manifest at {root}/manifest.jsonl: one meta record, then
// one record per entry, fixed key order.
DatasetManifest load_manifest(const std::filesystem::path& root);
void write_manifest(const std::filesystem::path& root, const DatasetManifest& m);

// Patient key extraction: first capture group of `pattern` matched against
// the file stem, falling back to the whole stem. The default pattern takes
// the prefix before the first underscore.
std::string patient_id_from_stem(const std::string& stem,
                                 const std::string& pattern = "([^_]+)_.*");

}  // namespace cpd
