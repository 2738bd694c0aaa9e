#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ties/dataset.hpp"
#include "ties/events.hpp"
#include "ties/logistic.hpp"

namespace ties {

// Per-feature divisors estimated from a uniform random player sample:
// each sampled player's features are computed against all of their
// co-players and averaged. Features whose mean is not positive keep an
// identity divisor.
struct NormalizationProfile {
  std::array<double, kFeatureCount> divisor{};
  std::array<bool, kFeatureCount> identity{};

  FeatureVector apply(const FeatureVector& v) const {
    FeatureVector out = v;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      if (!identity[f]) out[f] = v[f] / divisor[f];
    }
    return out;
  }
};

NormalizationProfile build_normalization(const EventStore& store, std::size_t sample_size,
                                         std::uint64_t seed, const FeatureOptions& options = {});

// Disjoint halves with sizes differing by at most one, seeded.
struct SplitResult {
  std::vector<std::uint32_t> train, test;
};

SplitResult split_by_pairs(std::size_t n, std::uint64_t seed);

// Halves the set of raters instead of the set of pairs; every example of a
// rater lands on one side.
SplitResult split_by_individuals(std::span<const LabeledExample> examples, std::uint64_t seed);

// One row of the single-feature comparison table: the fitted logistic model
// plus its held-out AUC.
struct FeatureTableRow {
  int feature = 0;
  LogisticModel model;
  double auc = 0;
};

std::vector<FeatureTableRow> feature_table(std::span<const LabeledExample> examples,
                                           std::uint64_t seed);

// Mean held-out AUC and its standard error per (history bin, feature) cell,
// over seeded permutation splits. Bins of width 10 below 100 games, width
// 100 above. Bins lacking both classes are emitted with skipped = true.
struct RobustnessPoint {
  std::uint64_t bin_lo = 0, bin_hi = 0;  // rater N_x range, half-open
  int feature = 0;
  double mean_auc = 0;
  double se = 0;
  std::uint32_t examples = 0;
  bool skipped = false;
};

struct RobustnessOptions {
  int permutations = 10;
  std::uint64_t seed = 0;
  int threads = 1;
};

std::vector<RobustnessPoint> robustness_study(std::span<const LabeledExample> examples,
                                              const RobustnessOptions& options = {});

// Joins a feature dump with friend labels into a dataset: one example per
// (rater, target) feature row, label 1 iff the directed pair is labeled.
Dataset join_examples(std::span<const PairFeatures> rows,
                      std::span<const std::pair<PlayerId, PlayerId>> labeled_pairs,
                      const EventStore& store);

}  // namespace ties
