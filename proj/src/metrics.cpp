#include "cpd/metrics.hpp"

#include <stdexcept>
#include <string>

namespace cpd {

MetricReport evaluate(const BinaryMask& pred, const BinaryMask& truth) {
  if (pred.width != truth.width || pred.height != truth.height)
    throw std::invalid_argument("evaluate: dimension mismatch (" +
                                std::to_string(pred.width) + "x" +
                                std::to_string(pred.height) + " vs " +
                                std::to_string(truth.width) + "x" +
                                std::to_string(truth.height) + ")");

  MetricReport r;
  for (std::size_t i = 0; i < pred.data.size(); ++i) {
    const bool p = pred.data[i] != 0;
    const bool t = truth.data[i] != 0;
    if (p && t) ++r.tp;
    else if (p && !t) ++r.fp;
    else if (!p && t) ++r.fn;
    else ++r.tn;
  }

  const std::uint64_t dice_den = 2 * r.tp + r.fp + r.fn;
  const std::uint64_t iou_den = r.tp + r.fp + r.fn;
  r.dice = dice_den > 0 ? 2.0 * static_cast<double>(r.tp) / static_cast<double>(dice_den) : 1.0;
  r.iou = iou_den > 0 ? static_cast<double>(r.tp) / static_cast<double>(iou_den) : 1.0;
  const std::uint64_t total = r.tp + r.fp + r.fn + r.tn;
  r.pixel_accuracy =
      total > 0 ? static_cast<double>(r.tp + r.tn) / static_cast<double>(total) : 1.0;
  return r;
}

AggregateReport aggregate_mean(const std::vector<MetricReport>& reports) {
  AggregateReport agg;
  agg.count = reports.size();
  if (reports.empty()) return agg;
  for (const auto& r : reports) {
    agg.dice_mean += r.dice;
    agg.iou_mean += r.iou;
    agg.pixel_accuracy_mean += r.pixel_accuracy;
  }
  const double n = static_cast<double>(reports.size());
  agg.dice_mean /= n;
  agg.iou_mean /= n;
  agg.pixel_accuracy_mean /= n;
  return agg;
}

}  // namespace cpd
