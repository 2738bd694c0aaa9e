#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ties/events.hpp"

namespace ties {

// Binary interaction series of a pair: sorted bins where the pair co-played
// at least one game. Bin multiplicity saturates to one; raw game counts live
// in the store.
struct PairSeries {
  PlayerId x = 0, y = 0;
  std::vector<BinIndex> bins;  // strictly increasing, all < total_bins
  BinIndex total_bins = 0;
};

PairSeries build_series(const EventStore& store, PlayerId x, PlayerId y);

// All (focal, other) pairs with at least one shared game, sorted.
struct PairUniverse {
  std::vector<std::pair<PlayerId, PlayerId>> pairs;
};

PairUniverse enumerate_pairs(const EventStore& store, std::span<const PlayerId> focal);

}  // namespace ties
