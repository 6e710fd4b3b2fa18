#pragma once

#include <cstdint>
#include <vector>

#include "cpd/raster.hpp"

namespace cpd {

struct MetricReport {
  double dice = 0;
  double iou = 0;
  double pixel_accuracy = 0;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
};

// Pixel counts and the derived overlap metrics. Two empty masks score 1 on
// dice and iou (perfect-agreement convention), so dataset averages stay
// well-defined.
MetricReport evaluate(const BinaryMask& pred, const BinaryMask& truth);

struct AggregateReport {
  std::size_t count = 0;
  double dice_mean = 0;
  double iou_mean = 0;
  double pixel_accuracy_mean = 0;
};

// Mean of per-image metrics (not global pixel pooling).
AggregateReport aggregate_mean(const std::vector<MetricReport>& reports);

}  // namespace cpd
