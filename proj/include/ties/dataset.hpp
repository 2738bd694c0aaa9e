#pragma once

#include <cstdint>
#include <vector>

#include "ties/features.hpp"

namespace ties {

// One directed labeled pair: features plus the survey-style friend label.
struct LabeledExample {
  PlayerId rater = 0;
  PlayerId target = 0;
  FeatureVector features{};
  int label = 0;                 // friend = 1, non-friend = 0
  std::uint64_t rater_games = 0;  // N_x of the rater, used for history binning
};

using Dataset = std::vector<LabeledExample>;

}  // namespace ties
