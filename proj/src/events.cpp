#include "ties/events.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>

namespace ties {

namespace {

// Splits a line into exactly `n` tab-separated fields.
bool split_fields(const std::string& line, std::span<std::string_view> out) {
  std::size_t start = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (start > line.size()) return false;
    std::size_t tab = line.find('\t', start);
    if (i + 1 == out.size()) {
      if (tab != std::string::npos) return false;  // trailing fields
      out[i] = std::string_view(line).substr(start);
    } else {
      if (tab == std::string::npos) return false;
      out[i] = std::string_view(line).substr(start, tab - start);
      start = tab + 1;
    }
  }
  return true;
}

template <typename T>
bool parse_uint(std::string_view s, T& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_int64(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

EventStore EventStore::ingest(const std::string& path, std::int64_t bin_seconds) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open event log: " + path);

  std::vector<InteractionEvent> events;
  bool have_window = false;
  std::int64_t window_start = 0, window_end = 0;
  std::unordered_map<GameId, std::int64_t> game_ts;
  std::set<std::pair<GameId, PlayerId>> seen;

  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!have_window) {
        // First comment of the form `# <start> <end>` declares the window.
        std::string_view body = std::string_view(line).substr(1);
        while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
        std::size_t sp = body.find(' ');
        if (sp != std::string_view::npos) {
          std::int64_t ws, we;
          if (parse_int64(body.substr(0, sp), ws) && parse_int64(body.substr(sp + 1), we)) {
            if (we <= ws) throw FormatError(path, line_no, "window end must exceed start");
            window_start = ws;
            window_end = we;
            have_window = true;
          }
        }
      }
      continue;
    }
    if (!have_window) {
      throw FormatError(path, line_no, "record before window declaration (`# start end`)");
    }
    std::string_view f[8];
    if (!split_fields(line, f)) {
      throw FormatError(path, line_no, "expected 8 tab-separated fields");
    }
    InteractionEvent ev;
    if (!parse_uint(f[0], ev.game_id)) throw FormatError(path, line_no, "bad game_id");
    if (!parse_int64(f[1], ev.timestamp)) throw FormatError(path, line_no, "bad timestamp");
    if (!parse_uint(f[2], ev.playlist)) throw FormatError(path, line_no, "bad playlist");
    if (!parse_uint(f[3], ev.team)) throw FormatError(path, line_no, "bad team");
    if (!parse_uint(f[4], ev.player)) throw FormatError(path, line_no, "bad player_id");
    if (!parse_uint(f[5], ev.direct_assists)) throw FormatError(path, line_no, "bad direct_assists");
    if (!parse_uint(f[6], ev.indirect_assists)) throw FormatError(path, line_no, "bad indirect_assists");
    if (!parse_uint(f[7], ev.betrayals)) throw FormatError(path, line_no, "bad betrayals");

    if (ev.timestamp < window_start || ev.timestamp >= window_end) {
      throw FormatError(path, line_no, "timestamp outside declared window");
    }
    auto [it, fresh] = game_ts.emplace(ev.game_id, ev.timestamp);
    if (!fresh && it->second != ev.timestamp) {
      throw FormatError(path, line_no, "game " + std::to_string(ev.game_id) +
                                           " has conflicting timestamps");
    }
    if (!seen.emplace(ev.game_id, ev.player).second) {
      throw FormatError(path, line_no, "duplicate (game_id, player) record");
    }
    events.push_back(ev);
  }
  if (!have_window) throw FormatError(path, line_no, "missing window declaration");

  EventStore store;
  store.events_ = std::move(events);
  store.window_start_ = window_start;
  store.window_end_ = window_end;
  store.bin_seconds_ = bin_seconds;
  store.finalize();
  return store;
}

EventStore EventStore::build(std::vector<InteractionEvent> events,
                             std::int64_t window_start, std::int64_t window_end,
                             std::int64_t bin_seconds) {
  if (window_end <= window_start) throw InputError("window end must exceed start");
  std::unordered_map<GameId, std::int64_t> game_ts;
  std::set<std::pair<GameId, PlayerId>> seen;
  for (const auto& ev : events) {
    if (ev.timestamp < window_start || ev.timestamp >= window_end) {
      throw InputError("event timestamp outside window");
    }
    auto [it, fresh] = game_ts.emplace(ev.game_id, ev.timestamp);
    if (!fresh && it->second != ev.timestamp) {
      throw InputError("game " + std::to_string(ev.game_id) + " has conflicting timestamps");
    }
    if (!seen.emplace(ev.game_id, ev.player).second) {
      throw InputError("duplicate (game_id, player) record");
    }
  }
  EventStore store;
  store.events_ = std::move(events);
  store.window_start_ = window_start;
  store.window_end_ = window_end;
  store.bin_seconds_ = bin_seconds;
  store.finalize();
  return store;
}

void EventStore::finalize() {
  std::sort(events_.begin(), events_.end(),
            [](const InteractionEvent& a, const InteractionEvent& b) {
              if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
              if (a.game_id != b.game_id) return a.game_id < b.game_id;
              return a.player < b.player;
            });

  epoch_start_ = (window_start_ / kSecondsPerDay) * kSecondsPerDay;
  const std::int64_t span = window_end_ - epoch_start_;
  total_bins_ = static_cast<BinIndex>((span + bin_seconds_ - 1) / bin_seconds_);

  game_spans_.clear();
  game_lookup_.clear();
  for (std::uint32_t i = 0; i < events_.size(); ++i) {
    if (i == 0 || events_[i].game_id != events_[i - 1].game_id ||
        events_[i].timestamp != events_[i - 1].timestamp) {
      if (!game_lookup_.emplace(events_[i].game_id, static_cast<std::uint32_t>(game_spans_.size())).second) {
        // Same id at two timestamps would already have thrown; this is a
        // same-id gap within one timestamp block, which the sort forbids.
        throw InputError("game " + std::to_string(events_[i].game_id) + " is fragmented");
      }
      game_spans_.push_back({events_[i].game_id, i, i + 1});
    } else {
      game_spans_.back().end = i + 1;
    }
  }

  player_ids_.clear();
  for (const auto& ev : events_) player_ids_.push_back(ev.player);
  std::sort(player_ids_.begin(), player_ids_.end());
  player_ids_.erase(std::unique(player_ids_.begin(), player_ids_.end()), player_ids_.end());

  std::vector<std::uint32_t> counts(player_ids_.size(), 0);
  for (const auto& ev : events_) ++counts[player_index(ev.player)];
  player_offsets_.assign(player_ids_.size() + 1, 0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    player_offsets_[i + 1] = player_offsets_[i] + counts[i];
  }
  player_event_index_.resize(events_.size());
  std::vector<std::uint32_t> cursor(player_offsets_.begin(), player_offsets_.end() - 1);
  for (std::uint32_t i = 0; i < events_.size(); ++i) {
    player_event_index_[cursor[player_index(events_[i].player)]++] = i;
  }

  playlists_.clear();
  for (const auto& ev : events_) playlists_.push_back(ev.playlist);
  std::sort(playlists_.begin(), playlists_.end());
  playlists_.erase(std::unique(playlists_.begin(), playlists_.end()), playlists_.end());
}

void EventStore::dump(const std::string& path) const {
  std::FILE* out = std::fopen(path.c_str(), "wb");
  if (!out) throw InputError("cannot open for writing: " + path);
  std::fprintf(out, "# %lld %lld\n", static_cast<long long>(window_start_),
               static_cast<long long>(window_end_));
  for (const auto& ev : events_) {
    std::fprintf(out, "%llu\t%lld\t%u\t%u\t%llu\t%u\t%u\t%u\n",
                 static_cast<unsigned long long>(ev.game_id),
                 static_cast<long long>(ev.timestamp), ev.playlist, ev.team,
                 static_cast<unsigned long long>(ev.player), ev.direct_assists,
                 ev.indirect_assists, ev.betrayals);
  }
  std::fclose(out);
}

bool EventStore::has_player(PlayerId id) const {
  auto it = std::lower_bound(player_ids_.begin(), player_ids_.end(), id);
  return it != player_ids_.end() && *it == id;
}

std::uint32_t EventStore::player_index(PlayerId id) const {
  auto it = std::lower_bound(player_ids_.begin(), player_ids_.end(), id);
  if (it == player_ids_.end() || *it != id) {
    throw InputError("unknown player id " + std::to_string(id));
  }
  return static_cast<std::uint32_t>(it - player_ids_.begin());
}

std::span<const std::uint32_t> EventStore::player_events(std::uint32_t idx) const {
  return std::span<const std::uint32_t>(player_event_index_)
      .subspan(player_offsets_[idx], player_offsets_[idx + 1] - player_offsets_[idx]);
}

std::uint64_t EventStore::games_played(PlayerId id) const {
  return player_events(player_index(id)).size();
}

std::vector<GameRef> EventStore::games_of(PlayerId id) const {
  std::vector<GameRef> out;
  for (std::uint32_t offset : player_events(player_index(id))) {
    const InteractionEvent& ev = events_[offset];
    out.push_back({ev.game_id, bin_of(ev.timestamp), ev.team, ev.playlist});
  }
  return out;
}

std::vector<Copresence> EventStore::copresence(PlayerId x, PlayerId y) const {
  const std::uint32_t xi = player_index(x);
  const std::uint32_t yi = player_index(y);
  if (x == y) throw InputError("copresence of a player with itself");
  std::vector<Copresence> out;
  // Scan the sparser player's games and look for the other in each game.
  const bool swap = player_events(yi).size() < player_events(xi).size();
  const std::uint32_t base = swap ? yi : xi;
  for (std::uint32_t offset : player_events(base)) {
    const InteractionEvent& ev = events_[offset];
    auto span = game_events(ev.game_id);
    const PlayerId other = swap ? x : y;
    const InteractionEvent* other_ev = nullptr;
    for (const auto& e : span) {
      if (e.player == other) {
        other_ev = &e;
        break;
      }
    }
    if (!other_ev) continue;
    const InteractionEvent& ex = swap ? *other_ev : ev;
    const InteractionEvent& ey = swap ? ev : *other_ev;
    out.push_back({ev.game_id, bin_of(ev.timestamp), ex.team == ey.team, ev.playlist,
                   ex.direct_assists, ex.indirect_assists, ex.betrayals,
                   ey.direct_assists, ey.indirect_assists, ey.betrayals});
  }
  return out;
}

std::span<const InteractionEvent> EventStore::game_events(GameId id) const {
  auto it = game_lookup_.find(id);
  if (it == game_lookup_.end()) throw InputError("unknown game id " + std::to_string(id));
  const GameSpan& s = game_spans_[it->second];
  return std::span<const InteractionEvent>(events_).subspan(s.begin, s.end - s.begin);
}

}  // namespace ties
