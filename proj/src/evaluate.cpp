#include "ties/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>

#include "ties/parallel.hpp"
#include "ties/rng.hpp"
#include "ties/roc.hpp"

namespace ties {

namespace {

// Fits the feature's logistic model on the train split and scores the test
// split. Degenerate single-class or constant-feature splits yield NaN.
double holdout_auc(std::span<const LabeledExample> examples, int feature,
                   std::span<const std::uint32_t> train, std::span<const std::uint32_t> test,
                   LogisticModel* fitted) {
  std::vector<double> x;
  std::vector<int> y;
  x.reserve(train.size());
  y.reserve(train.size());
  for (std::uint32_t i : train) {
    x.push_back(examples[i].features[feature]);
    y.push_back(examples[i].label);
  }
  LogisticModel model;
  try {
    model = fit_logistic(x, y);
  } catch (const InputError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (fitted) *fitted = model;
  std::vector<std::pair<double, int>> scored;
  scored.reserve(test.size());
  for (std::uint32_t i : test) {
    scored.emplace_back(model.score(examples[i].features[feature]), examples[i].label);
  }
  try {
    return roc_auc(scored);
  } catch (const InputError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

std::pair<std::uint64_t, std::uint64_t> history_bin(std::uint64_t n_x) {
  if (n_x < 100) {
    const std::uint64_t lo = (n_x / 10) * 10;
    return {lo, lo + 10};
  }
  const std::uint64_t lo = (n_x / 100) * 100;
  return {lo, lo + 100};
}

}  // namespace

NormalizationProfile build_normalization(const EventStore& store, std::size_t sample_size,
                                         std::uint64_t seed, const FeatureOptions& options) {
  if (sample_size > store.player_count()) {
    throw InputError("normalization sample exceeds population");
  }
  Rng rng(seed);
  std::vector<std::uint64_t> picks =
      rng.sample_without_replacement(store.player_count(), sample_size);
  std::sort(picks.begin(), picks.end());
  std::vector<PlayerId> sample;
  sample.reserve(picks.size());
  for (std::uint64_t p : picks) sample.push_back(store.player_at(static_cast<std::uint32_t>(p)));

  std::array<double, kFeatureCount> sum{};
  std::uint64_t pairs = 0;
  for_each_focal_features(store, sample, options, [&](std::span<const PairFeatures> rows) {
    for (const auto& row : rows) {
      for (std::size_t f = 0; f < kFeatureCount; ++f) sum[f] += row.values[f];
      ++pairs;
    }
  });

  NormalizationProfile profile;
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    const double mean = pairs ? sum[f] / static_cast<double>(pairs) : 0.0;
    if (mean > 0) {
      profile.divisor[f] = mean;
      profile.identity[f] = false;
    } else {
      profile.divisor[f] = 1.0;
      profile.identity[f] = true;
    }
  }
  return profile;
}

SplitResult split_by_pairs(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw InputError("cannot split fewer than 2 examples");
  Rng rng(seed);
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  const std::size_t half = n / 2;
  SplitResult split;
  split.train.assign(order.begin(), order.begin() + half);
  split.test.assign(order.begin() + half, order.end());
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

SplitResult split_by_individuals(std::span<const LabeledExample> examples, std::uint64_t seed) {
  if (examples.size() < 2) throw InputError("cannot split fewer than 2 examples");
  std::vector<PlayerId> raters;
  for (const auto& e : examples) raters.push_back(e.rater);
  std::sort(raters.begin(), raters.end());
  raters.erase(std::unique(raters.begin(), raters.end()), raters.end());

  Rng rng(seed);
  rng.shuffle(raters);
  std::set<PlayerId> train_raters(raters.begin(), raters.begin() + raters.size() / 2);

  SplitResult split;
  for (std::uint32_t i = 0; i < examples.size(); ++i) {
    (train_raters.count(examples[i].rater) ? split.train : split.test).push_back(i);
  }
  return split;
}

std::vector<FeatureTableRow> feature_table(std::span<const LabeledExample> examples,
                                           std::uint64_t seed) {
  const SplitResult split = split_by_pairs(examples.size(), seed);
  std::vector<FeatureTableRow> table(kFeatureCount);
  for (int f = 0; f < static_cast<int>(kFeatureCount); ++f) {
    table[f].feature = f;
    table[f].auc = holdout_auc(examples, f, split.train, split.test, &table[f].model);
  }
  return table;
}

std::vector<RobustnessPoint> robustness_study(std::span<const LabeledExample> examples,
                                              const RobustnessOptions& options) {
  // Bin example indices by the rater's history length.
  std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::uint32_t>>>
      bins;
  for (std::uint32_t i = 0; i < examples.size(); ++i) {
    const auto range = history_bin(examples[i].rater_games);
    auto it = std::find_if(bins.begin(), bins.end(),
                           [&](const auto& b) { return b.first == range; });
    if (it == bins.end()) {
      bins.push_back({range, {i}});
    } else {
      it->second.push_back(i);
    }
  }
  std::sort(bins.begin(), bins.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<RobustnessPoint> curve;
  for (const auto& [range, members] : bins) {
    std::uint32_t pos = 0;
    for (std::uint32_t i : members) pos += (examples[i].label != 0);
    const bool skip = pos == 0 || pos == members.size() || members.size() < 4;
    for (int f = 0; f < static_cast<int>(kFeatureCount); ++f) {
      RobustnessPoint point;
      point.bin_lo = range.first;
      point.bin_hi = range.second;
      point.feature = f;
      point.examples = static_cast<std::uint32_t>(members.size());
      point.skipped = skip;
      if (skip) {
        point.mean_auc = std::numeric_limits<double>::quiet_NaN();
        point.se = std::numeric_limits<double>::quiet_NaN();
        curve.push_back(point);
        continue;
      }
      curve.push_back(point);
    }
    if (skip) continue;

    // Stratified permutation splits keep both classes on both sides even in
    // small bins; each permutation is seeded independently of the feature.
    std::vector<std::uint32_t> positives, negatives;
    for (std::uint32_t i : members) {
      (examples[i].label ? positives : negatives).push_back(i);
    }
    std::vector<std::vector<double>> auc_per_feature(kFeatureCount);
    for (int perm = 0; perm < options.permutations; ++perm) {
      Rng rng(options.seed * 1000003u + static_cast<std::uint64_t>(perm) * 7919u +
              range.first);
      std::vector<std::uint32_t> p = positives, q = negatives;
      rng.shuffle(p);
      rng.shuffle(q);
      std::vector<std::uint32_t> train, test;
      for (std::size_t i = 0; i < p.size(); ++i) {
        (i < p.size() / 2 ? train : test).push_back(p[i]);
      }
      for (std::size_t i = 0; i < q.size(); ++i) {
        (i < q.size() / 2 ? train : test).push_back(q[i]);
      }
      for (int f = 0; f < static_cast<int>(kFeatureCount); ++f) {
        const double auc = holdout_auc(examples, f, train, test, nullptr);
        if (!std::isnan(auc)) auc_per_feature[f].push_back(auc);
      }
    }
    for (int f = 0; f < static_cast<int>(kFeatureCount); ++f) {
      RobustnessPoint& point = curve[curve.size() - kFeatureCount + f];
      const auto& values = auc_per_feature[f];
      if (values.empty()) {
        point.skipped = true;
        point.mean_auc = std::numeric_limits<double>::quiet_NaN();
        point.se = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      double mean = 0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      double var = 0;
      for (double v : values) var += (v - mean) * (v - mean);
      const double sd = values.size() > 1
                            ? std::sqrt(var / static_cast<double>(values.size() - 1))
                            : 0.0;
      point.mean_auc = mean;
      point.se = sd / std::sqrt(static_cast<double>(values.size()));
    }
  }
  return curve;
}

Dataset join_examples(std::span<const PairFeatures> rows,
                      std::span<const std::pair<PlayerId, PlayerId>> labeled_pairs,
                      const EventStore& store) {
  std::set<std::pair<PlayerId, PlayerId>> friends(labeled_pairs.begin(), labeled_pairs.end());
  Dataset data;
  data.reserve(rows.size());
  std::unordered_map<PlayerId, std::uint64_t> games_cache;
  for (const auto& row : rows) {
    LabeledExample e;
    e.rater = row.x;
    e.target = row.y;
    e.features = row.values;
    e.label = friends.count({row.x, row.y}) ? 1 : 0;
    auto it = games_cache.find(row.x);
    if (it == games_cache.end()) {
      it = games_cache.emplace(row.x, store.games_played(row.x)).first;
    }
    e.rater_games = it->second;
    data.push_back(e);
  }
  return data;
}

}  // namespace ties
