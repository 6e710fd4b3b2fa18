#include "cpd/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <regex>
#include <stdexcept>

#include <json.hpp>

#include "cpd/image_io.hpp"
#include "cpd/resize.hpp"
#include "cpd/rng.hpp"

namespace cpd {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string split_name(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
    case Split::Unassigned: return "unassigned";
  }
  return "?";
}

Split parse_split(std::string_view name) {
  if (name == "train") return Split::Train;
  if (name == "val") return Split::Val;
  if (name == "test") return Split::Test;
  if (name == "unassigned") return Split::Unassigned;
  throw std::invalid_argument("unknown split: " + std::string(name));
}

std::vector<SamplePair> patchify(const RasterImage& wsi_image,
                                 const BinaryMask& wsi_mask, int patch_size,
                                 const std::string& base_id,
                                 const std::string& patient_id) {
  if (patch_size < 1) throw std::invalid_argument("patch_size must be >= 1");
  if (wsi_image.width != wsi_mask.width || wsi_image.height != wsi_mask.height)
    throw std::invalid_argument("patchify: image/mask dimension mismatch");

  const int cols = wsi_image.width / patch_size;
  const int rows = wsi_image.height / patch_size;

  std::vector<SamplePair> patches;
  patches.reserve(static_cast<std::size_t>(std::max(0, cols * rows)));
  for (int gy = 0; gy < rows; ++gy) {
    for (int gx = 0; gx < cols; ++gx) {
      SamplePair p;
      p.image = RasterImage(patch_size, patch_size);
      p.mask = BinaryMask(patch_size, patch_size);
      const int oy = gy * patch_size;
      const int ox = gx * patch_size;
      for (int y = 0; y < patch_size; ++y) {
        for (int x = 0; x < patch_size; ++x) {
          for (int c = 0; c < 3; ++c)
            p.image.at(y, x, c) = wsi_image.at(oy + y, ox + x, c);
          p.mask.at(y, x) = wsi_mask.at(oy + y, ox + x);
        }
      }
      p.id = base_id + "_y" + std::to_string(gy) + "_x" + std::to_string(gx);
      p.patient_id = patient_id;
      patches.push_back(std::move(p));
    }
  }
  return patches;
}

HsvPixel rgb_to_hsv(float r, float g, float b) {
  const double rd = r, gd = g, bd = b;
  const double max = std::max({rd, gd, bd});
  const double min = std::min({rd, gd, bd});
  const double delta = max - min;

  HsvPixel out;
  out.v = max * 255.0;
  out.s = max > 0.0 ? (delta / max) * 255.0 : 0.0;
  if (delta > 0.0) {
    double h;
    if (max == rd)
      h = 60.0 * std::fmod((gd - bd) / delta, 6.0);
    else if (max == gd)
      h = 60.0 * ((bd - rd) / delta + 2.0);
    else
      h = 60.0 * ((rd - gd) / delta + 4.0);
    if (h < 0) h += 360.0;
    out.h = h;
  }
  return out;
}

bool is_background(const RasterImage& patch, double threshold) {
  const std::size_t n = patch.pixel_count();
  if (n == 0) return false;

  // Criteria band: s in [0, 0.12*255], v in [0.9*255, 255]; hue unrestricted.
  const double s_max = 0.12 * 255.0;
  const double v_min = 0.9 * 255.0;

  std::size_t in_range = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const HsvPixel hsv = rgb_to_hsv(patch.data[p * 3], patch.data[p * 3 + 1],
                                    patch.data[p * 3 + 2]);
    if (hsv.s <= s_max && hsv.v >= v_min) ++in_range;
  }
  return static_cast<double>(in_range) >
         threshold * static_cast<double>(n);  // strictly more than
}

DatasetManifest split_by_patient(std::vector<ManifestEntry> entries,
                                 std::array<double, 3> fractions,
                                 std::uint64_t seed) {
  const double total_frac = fractions[0] + fractions[1] + fractions[2];
  if (std::abs(total_frac - 1.0) > 1e-9)
    throw std::invalid_argument("split fractions must sum to 1");

  // Patients in first-seen order, with their patch counts.
  std::vector<std::string> patients;
  std::map<std::string, std::size_t> patch_count;
  for (const auto& e : entries) {
    if (e.patient_id.empty())
      throw std::invalid_argument("entry " + e.id + " has no patient_id");
    auto [it, inserted] = patch_count.try_emplace(e.patient_id, 0);
    if (inserted) patients.push_back(e.patient_id);
    ++it->second;
  }
  if (patients.size() < 3)
    throw std::invalid_argument(
        "need at least 3 patients to form three nonempty splits, got " +
        std::to_string(patients.size()));

  // Fisher-Yates with our own draws, so the order is stable across
  // platforms for a given seed.
  Rng rng(seed);
  for (std::size_t i = patients.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.uniform_below(i + 1));
    std::swap(patients[i], patients[j]);
  }

  const double total = static_cast<double>(entries.size());
  std::array<double, 3> assigned{0.0, 0.0, 0.0};
  std::array<std::vector<std::string>, 3> members;
  std::map<std::string, int> split_of;

  for (const auto& patient : patients) {
    // Largest remaining capacity wins; ties go to the earlier split.
    int best = 0;
    double best_remaining = fractions[0] * total - assigned[0];
    for (int s = 1; s < 3; ++s) {
      const double remaining = fractions[s] * total - assigned[s];
      if (remaining > best_remaining) {
        best = s;
        best_remaining = remaining;
      }
    }
    split_of[patient] = best;
    assigned[best] += static_cast<double>(patch_count[patient]);
    members[best].push_back(patient);
  }

  // Greedy can starve a split on tiny corpora; rebalance by moving the
  // lightest patient out of the most populated split.
  for (int s = 0; s < 3; ++s) {
    if (!members[s].empty()) continue;
    int donor = 0;
    for (int d = 1; d < 3; ++d)
      if (members[d].size() > members[donor].size()) donor = d;
    auto lightest = std::min_element(
        members[donor].begin(), members[donor].end(),
        [&](const std::string& a, const std::string& b) {
          return patch_count[a] < patch_count[b];
        });
    const std::string moved = *lightest;
    members[donor].erase(lightest);
    members[s].push_back(moved);
    split_of[moved] = s;
    assigned[donor] -= static_cast<double>(patch_count[moved]);
    assigned[s] += static_cast<double>(patch_count[moved]);
  }

  static constexpr std::array<Split, 3> kSplits{Split::Train, Split::Val,
                                                Split::Test};
  DatasetManifest manifest;
  manifest.split_fractions = fractions;
  manifest.seed = seed;
  manifest.entries = std::move(entries);
  for (auto& e : manifest.entries) e.split = kSplits[split_of[e.patient_id]];
  return manifest;
}

SamplePair resize_pair(const SamplePair& pair, int target) {
  check_pair(pair);
  if (pair.image.width != pair.image.height)
    throw std::invalid_argument("resize_pair: input must be square, got " +
                                std::to_string(pair.image.width) + "x" +
                                std::to_string(pair.image.height));
  if (target < 1) throw std::invalid_argument("resize_pair: target must be >= 1");

  SamplePair out = pair;
  out.image = resize_bilinear(pair.image, target, target);
  out.mask = resize_nearest(pair.mask, target, target);
  return out;
}

SamplePair load_pair(const std::filesystem::path& image_path,
                     const std::filesystem::path& mask_path) {
  SamplePair pair;
  pair.image = read_image_png(image_path);
  pair.mask = read_mask_png(mask_path);
  if (pair.image.width != pair.mask.width ||
      pair.image.height != pair.mask.height)
    throw std::runtime_error("image/mask dimension mismatch: " +
                             image_path.string() + " vs " + mask_path.string());
  pair.id = image_path.stem().string();
  pair.patient_id = patient_id_from_stem(pair.id);
  return pair;
}

SavedPaths save_pair(const SamplePair& pair, const std::filesystem::path& root) {
  check_pair(pair);
  if (pair.id.empty()) throw std::invalid_argument("save_pair: empty id");
  fs::create_directories(root / "images");
  fs::create_directories(root / "masks");
  SavedPaths paths;
  paths.image_path = root / "images" / (pair.id + ".png");
  paths.mask_path = root / "masks" / (pair.id + ".png");
  write_image_png(paths.image_path, pair.image);
  write_mask_png(paths.mask_path, pair.mask);
  return paths;
}

DatasetManifest load_manifest(const std::filesystem::path& root) {
  const fs::path path = root / "manifest.jsonl";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path.string());

  DatasetManifest manifest;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto record = ordered_json::parse(line);
    const std::string type = record.value("type", "sample");
    if (type == "meta") {
      manifest.seed = record.value("seed", std::uint64_t{0});
      if (record.contains("split_fractions")) {
        const auto& f = record["split_fractions"];
        manifest.split_fractions = {f.at(0).get<double>(),
                                    f.at(1).get<double>(),
                                    f.at(2).get<double>()};
      }
      continue;
    }
    ManifestEntry e;
    e.id = record.at("id").get<std::string>();
    e.patient_id = record.at("patient_id").get<std::string>();
    e.image_path = record.at("image_path").get<std::string>();
    e.mask_path = record.at("mask_path").get<std::string>();
    e.split = parse_split(record.value("split", "unassigned"));
    manifest.entries.push_back(std::move(e));
  }
  return manifest;
}

void write_manifest(const std::filesystem::path& root,
                    const DatasetManifest& m) {
  fs::create_directories(root);
  const fs::path path = root / "manifest.jsonl";
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write manifest: " + path.string());

  ordered_json meta;
  meta["type"] = "meta";
  meta["seed"] = m.seed;
  meta["split_fractions"] = m.split_fractions;
  out << meta.dump() << '\n';

  for (const auto& e : m.entries) {
    ordered_json record;
    record["type"] = "sample";
    record["id"] = e.id;
    record["patient_id"] = e.patient_id;
    record["image_path"] = e.image_path;
    record["mask_path"] = e.mask_path;
    record["split"] = split_name(e.split);
    out << record.dump() << '\n';
  }
  if (!out) throw std::runtime_error("failed writing manifest: " + path.string());
}

std::string patient_id_from_stem(const std::string& stem,
                                 const std::string& pattern) {
  const std::regex re(pattern);
  std::smatch match;
  if (std::regex_match(stem, match, re) && match.size() > 1)
    return match[1].str();
  return stem;
}

}  // namespace cpd
