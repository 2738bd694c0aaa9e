#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "ties/events.hpp"

namespace ties {

// Synthetic world parameters. All stochastic choices flow from one seeded
// generator with a fixed draw order (friendship graph, then per-agent traits,
// then per-agent session schedules, then the bin-by-bin runtime loop), so a
// (config, seed) pair reproduces the log byte for byte.
struct WorldConfig {
  std::uint32_t agents = 2000;
  std::uint32_t days = 60;
  std::uint64_t seed = 42;
  std::int64_t start_day = 14866;  // unix days; default 2010-09-14 UTC
  std::int64_t bin_seconds = kDefaultBinSeconds;

  // Friendship graph: ring lattice with rewiring.
  std::uint32_t friend_degree = 8;  // even
  double friend_rewire = 0.10;

  // Per-agent activity: lognormal sessions/day (heavy tailed).
  double activity_median = 0.10;
  double activity_sigma = 2.0;

  // Diurnal/weekly intensity profile.
  double diurnal_amplitude = 0.8;  // in [0, 1)
  double peak_hour = 16.0;         // UTC clock convention
  double weekend_multiplier = 1.5;

  // Sessions: consecutive games by one party, one game per bin.
  double friend_session_mean = 12.0;  // party of >= 2
  double solo_session_mean = 1.25;
  double party_probability = 0.35;
  double friend_join_probability = 0.5;

  // Playlists; indices below vehicle_playlists support indirect assists.
  std::uint16_t playlist_count = 8;
  std::uint16_t vehicle_playlists = 3;
  double favorite_playlist_probability = 0.5;

  // Matchmaking.
  std::uint32_t team_size = 4;
  double friend_split_probability = 0.08;  // party member sent to the other team

  // Cooperative event rates (Poisson means per game).
  double assist_base = 0.3;
  double assist_friend_bonus = 1.5;    // per same-team friend
  double indirect_base = 0.1;
  double indirect_friend_bonus = 0.8;  // per same-team friend, vehicle playlists
  double betrayal_base = 0.02;
  double betrayal_friend_bonus = 1.2;  // per opposing-team friend

  std::int64_t window_start() const { return start_day * kSecondsPerDay; }
  std::int64_t window_end() const {
    return window_start() + static_cast<std::int64_t>(days) * kSecondsPerDay;
  }
  void validate() const;  // throws InputError on violated invariants
};

// Directed per-pair ledger, keyed by the lower agent id first.
struct PairLedger {
  std::uint64_t shared_games = 0;
  std::uint64_t shared_sessions = 0;  // distinct co-play episodes
  std::uint64_t assists_lo_hi = 0, assists_hi_lo = 0;
  std::uint64_t indirect_lo_hi = 0, indirect_hi_lo = 0;
  std::uint64_t betrayals_lo_hi = 0, betrayals_hi_lo = 0;
  std::uint64_t last_session_key = ~0ull;  // internal: current co-play episode
};

inline std::uint64_t pair_key(std::uint32_t lo, std::uint32_t hi) {
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

// Exact bookkeeping of everything the generator emitted; the oracle the
// feature pipeline is checked against.
struct GroundTruth {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> friendships;  // lo < hi
  std::vector<std::uint64_t> games_per_agent;
  std::unordered_map<std::uint64_t, PairLedger> pairs;
  std::uint64_t emitted_games = 0;
  std::uint64_t emitted_events = 0;
  std::uint64_t dropped_games = 0;      // single-team assemblies, never emitted
  std::uint64_t undersized_games = 0;   // emitted with open slots
  std::uint64_t skipped_sessions = 0;   // initiator already in a session

  bool are_friends(std::uint32_t a, std::uint32_t b) const;
};

struct World {
  WorldConfig config;
  std::vector<InteractionEvent> events;  // canonical (timestamp, game, player) order
  // Directed co-played friend pairs; the survey-style label file.
  std::vector<std::pair<PlayerId, PlayerId>> labels;
  GroundTruth truth;

  EventStore to_store() const {
    return EventStore::build(events, config.window_start(), config.window_end(),
                             config.bin_seconds);
  }
};

World generate(const WorldConfig& config);

// Relative session-start rate of a bin; periodic in day and week.
double profile_intensity(const WorldConfig& config, BinIndex bin);

// Flat key=value config files.
WorldConfig parse_world_config(const std::string& path);
void write_world_config(const WorldConfig& config, const std::string& path);

// Writes events.tsv, labels.tsv, names.tsv and the truth/ directory.
void write_world(const World& world, const std::string& directory);

}  // namespace ties
