#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ties/error.hpp"

namespace ties {

using PlayerId = std::uint64_t;
using GameId = std::uint64_t;
using BinIndex = std::uint32_t;

inline constexpr std::int64_t kDefaultBinSeconds = 600;
inline constexpr std::int64_t kSecondsPerDay = 86400;

// One player's participation record in one game instance.
struct InteractionEvent {
  GameId game_id = 0;
  std::int64_t timestamp = 0;  // unix seconds; shared by all events of a game
  std::uint16_t playlist = 0;
  std::uint16_t team = 0;
  PlayerId player = 0;
  std::uint32_t direct_assists = 0;
  std::uint32_t indirect_assists = 0;
  std::uint32_t betrayals = 0;
};

struct GameRef {
  GameId game_id;
  BinIndex bin;
  std::uint16_t team;
  std::uint16_t playlist;
};

// One shared game of a pair, with both players' per-game counters.
struct Copresence {
  GameId game_id;
  BinIndex bin;
  bool same_team;
  std::uint16_t playlist;
  std::uint32_t x_assists, x_indirect, x_betrayals;
  std::uint32_t y_assists, y_indirect, y_betrayals;
};

// Day-of-week from a unix timestamp, UTC, 0 = Monday.
inline int weekday_utc(std::int64_t ts) {
  std::int64_t days = ts / kSecondsPerDay;
  return static_cast<int>((days % 7 + 7 + 3) % 7);
}

// Immutable store of interaction events, sorted by (timestamp, game, player).
// Built once by ingest()/build(); all queries are pure reads and safe to run
// from any number of threads.
class EventStore {
 public:
  struct GameSpan {
    GameId id;
    std::uint32_t begin, end;  // event index range, half-open
  };

  // Reads the tab-separated event log (see README for the record layout).
  // The window declaration `# <start> <end>` must precede the first record.
  static EventStore ingest(const std::string& path,
                           std::int64_t bin_seconds = kDefaultBinSeconds);

  // Assembles a store from in-memory events (generator and test path).
  // Applies the same validation as ingest, minus line numbers.
  static EventStore build(std::vector<InteractionEvent> events,
                          std::int64_t window_start, std::int64_t window_end,
                          std::int64_t bin_seconds = kDefaultBinSeconds);

  // Canonical text dump; ingest(dump(s)) round-trips bit-identically.
  void dump(const std::string& path) const;

  std::size_t event_count() const { return events_.size(); }
  std::size_t player_count() const { return player_ids_.size(); }
  std::size_t game_count() const { return game_spans_.size(); }

  std::int64_t window_start() const { return window_start_; }
  std::int64_t window_end() const { return window_end_; }
  std::int64_t bin_seconds() const { return bin_seconds_; }
  // Bin epoch: window start truncated to midnight UTC.
  std::int64_t epoch_start() const { return epoch_start_; }
  BinIndex total_bins() const { return total_bins_; }
  BinIndex bin_of(std::int64_t timestamp) const {
    return static_cast<BinIndex>((timestamp - epoch_start_) / bin_seconds_);
  }

  std::span<const InteractionEvent> events() const { return events_; }
  std::span<const GameSpan> games() const { return game_spans_; }
  std::span<const PlayerId> players() const { return player_ids_; }
  std::span<const std::uint16_t> playlists() const { return playlists_; }

  bool has_player(PlayerId id) const;
  // Dense index of a player id; throws InputError for unknown players.
  std::uint32_t player_index(PlayerId id) const;
  PlayerId player_at(std::uint32_t index) const { return player_ids_[index]; }

  // Event offsets of one player, in time order.
  std::span<const std::uint32_t> player_events(std::uint32_t player_index) const;

  // Total games played by a player (N_x). Throws for unknown players.
  std::uint64_t games_played(PlayerId id) const;

  // Time-ordered list of a player's games. Throws for unknown players;
  // a known player with no games cannot occur (players exist via events).
  std::vector<GameRef> games_of(PlayerId id) const;

  // Shared games of x and y, time-ordered, one entry per game.
  std::vector<Copresence> copresence(PlayerId x, PlayerId y) const;

  // Events of one game. Throws InputError for unknown game ids.
  std::span<const InteractionEvent> game_events(GameId id) const;

 private:
  void finalize();

  std::vector<InteractionEvent> events_;
  std::vector<GameSpan> game_spans_;  // in (timestamp, game_id) order
  std::unordered_map<GameId, std::uint32_t> game_lookup_;  // id -> span index
  std::vector<PlayerId> player_ids_;  // sorted
  std::vector<std::uint32_t> player_offsets_;  // CSR into player_event_index_
  std::vector<std::uint32_t> player_event_index_;
  std::vector<std::uint16_t> playlists_;  // sorted vocabulary
  std::int64_t window_start_ = 0;
  std::int64_t window_end_ = 0;
  std::int64_t bin_seconds_ = kDefaultBinSeconds;
  std::int64_t epoch_start_ = 0;
  BinIndex total_bins_ = 0;
};

}  // namespace ties
