#include "ties/roc.hpp"

#include <algorithm>

namespace ties {

RocCurve roc_curve(std::span<const std::pair<double, int>> scored) {
  std::uint64_t pos = 0, neg = 0;
  for (const auto& [score, label] : scored) {
    (label ? pos : neg) += 1;
  }
  if (pos == 0 || neg == 0) throw InputError("roc requires both classes");

  std::vector<std::pair<double, int>> sorted(scored.begin(), scored.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  RocCurve curve;
  curve.points.push_back({0.0, 0.0});
  std::uint64_t tp = 0, fp = 0;
  double area2 = 0.0;  // twice the area, accumulated in exact counts
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    std::uint64_t tp_g = 0, fp_g = 0;
    while (j < sorted.size() && sorted[j].first == sorted[i].first) {
      (sorted[j].second ? tp_g : fp_g) += 1;
      ++j;
    }
    // Trapezoid over the tie group; diagonal segments give ties half credit.
    area2 += static_cast<double>(fp_g) * static_cast<double>(2 * tp + tp_g);
    tp += tp_g;
    fp += fp_g;
    curve.points.push_back({static_cast<double>(fp) / static_cast<double>(neg),
                            static_cast<double>(tp) / static_cast<double>(pos)});
    i = j;
  }
  curve.auc = area2 / (2.0 * static_cast<double>(pos) * static_cast<double>(neg));
  return curve;
}

double roc_auc(std::span<const std::pair<double, int>> scored) {
  return roc_curve(scored).auc;
}

double naive_error(std::span<const int> labels) {
  if (labels.empty()) throw InputError("naive_error on empty label set");
  std::uint64_t pos = 0;
  for (int l : labels) pos += (l != 0);
  const double frac = static_cast<double>(pos) / static_cast<double>(labels.size());
  return std::min(frac, 1.0 - frac);
}

}  // namespace ties
