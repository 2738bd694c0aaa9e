#pragma once

#include <cstdint>

#include "ties/events.hpp"

namespace ties {

// Directed cooperative totals x -> y. Direct and indirect assists accumulate
// x's per-game counters over shared same-team games; betrayals over shared
// different-team games. The per-game counters are per-player totals, so x's
// full counter is attributed to every qualifying co-player.
struct CooperativeCounts {
  std::uint64_t direct_assists = 0;    // A_xy
  std::uint64_t indirect_assists = 0;  // V_xy
  std::uint64_t betrayals = 0;         // B_xy
};

CooperativeCounts cooperative_counts(const EventStore& store, PlayerId x, PlayerId y);

std::uint64_t direct_assists(const EventStore& store, PlayerId x, PlayerId y);
std::uint64_t indirect_assists(const EventStore& store, PlayerId x, PlayerId y);
std::uint64_t betrayals_toward(const EventStore& store, PlayerId x, PlayerId y);

}  // namespace ties
