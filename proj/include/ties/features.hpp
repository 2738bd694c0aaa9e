#pragma once

#include <array>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "ties/cooperative.hpp"
#include "ties/events.hpp"
#include "ties/temporal.hpp"

namespace ties {

inline constexpr std::size_t kFeatureCount = 9;

enum FeatureId : int {
  kFeatAc = 0,
  kFeatPairFreq = 1,
  kFeatNormPairFreq = 2,
  kFeatScheduleEntropy = 3,
  kFeatSpatialEntropy = 4,
  kFeatJointEntropy = 5,
  kFeatAssists = 6,
  kFeatIndirect = 7,
  kFeatBetrayals = 8,
};

// Column order of the feature dump.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "ac", "n_xy", "norm_freq", "h_t", "h_s", "h_st", "assists", "indirect", "betrayals"};

int feature_index(std::string_view name);  // throws UsageError on unknown names

using FeatureVector = std::array<double, kFeatureCount>;

// Directed per-pair feature row: x is the focal player.
struct PairFeatures {
  PlayerId x = 0, y = 0;
  FeatureVector values{};
};

struct FeatureOptions {
  AcOptions ac;
  int threads = 1;
};

// Reference path: all nine features of one directed pair.
PairFeatures compute_pair_features(const EventStore& store, PlayerId x, PlayerId y,
                                   const FeatureOptions& options = {});

// Bulk path: feature rows for every (focal, co-player) pair, sorted by
// (x, y). One pass over each focal player's games; focal players are
// processed in parallel and results merged in sorted order, so the output is
// identical for any thread count.
std::vector<PairFeatures> compute_features(const EventStore& store,
                                           std::span<const PlayerId> focal,
                                           const FeatureOptions& options = {});

// Streaming variant: sink is called once per focal player (in sorted player
// order) with that player's rows. Keeps memory flat at population scale.
void for_each_focal_features(const EventStore& store, std::span<const PlayerId> focal,
                             const FeatureOptions& options,
                             const std::function<void(std::span<const PairFeatures>)>& sink);

}  // namespace ties
