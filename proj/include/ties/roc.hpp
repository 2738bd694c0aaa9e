#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ties/error.hpp"

namespace ties {

struct RocPoint {
  double fpr = 0, tpr = 0;
};

// ROC curve from a threshold sweep with tied scores grouped; the trapezoidal
// area equals the Mann-Whitney statistic with ties counted one half.
struct RocCurve {
  std::vector<RocPoint> points;  // from (0,0) to (1,1), both coords non-decreasing
  double auc = 0;
};

// scored: (score, label) with label in {0,1}. Requires both classes.
RocCurve roc_curve(std::span<const std::pair<double, int>> scored);

double roc_auc(std::span<const std::pair<double, int>> scored);

// Error rate of always predicting the majority class.
double naive_error(std::span<const int> labels);

}  // namespace ties
