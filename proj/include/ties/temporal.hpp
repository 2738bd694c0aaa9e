#pragma once

#include <cstdint>

#include "ties/events.hpp"
#include "ties/pairs.hpp"

namespace ties {

// One week of 10-minute bins: the default autocorrelation lag bound. Summing
// over every lag collapses the score to C(k,2), a pure function of the
// interaction count; bounding the lag keeps the score sensitive to session
// contiguity and weekly recurrence.
inline constexpr std::uint32_t kTauMaxWeek = 1008;

enum class AcMode {
  kAuto,    // sparse below the crossover, FFT above
  kSparse,  // pairwise gap count over the sorted bins
  kFft,     // dense expansion + radix-2 FFT, exact integer result
};

struct AcOptions {
  std::uint32_t tau_max = kTauMaxWeek;  // >= 1; use series.total_bins - 1 for all lags
  AcMode mode = AcMode::kAuto;
  std::size_t fft_crossover = 64;  // sparse path when bin count <= this
};

// Pair autocorrelation: the number of interaction-bin pairs (t', t) with
// 1 <= t - t' <= tau_max. Both paths return the same exact integer.
std::uint64_t autocorrelation(const PairSeries& series, const AcOptions& options = {});

struct PairFrequency {
  std::uint64_t shared_games = 0;  // N_xy, game multiplicity counted
  double normalized = 0.0;         // N_xy / N_x
};

PairFrequency pair_frequency(const EventStore& store, PlayerId x, PlayerId y);

enum class LocationKind {
  kSchedule,  // day of week, 7 locations
  kSpatial,   // playlist vocabulary
  kJoint,     // (weekday, playlist) pairs
};

// Shannon entropy (nats) of one player's game distribution over locations.
double entropy(const EventStore& store, PlayerId x, LocationKind kind);

// Sum of the two players' individual entropies.
double pair_entropy(const EventStore& store, PlayerId x, PlayerId y, LocationKind kind);

}  // namespace ties
