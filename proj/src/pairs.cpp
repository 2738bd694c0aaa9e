#include "ties/pairs.hpp"

#include <algorithm>

namespace ties {

PairSeries build_series(const EventStore& store, PlayerId x, PlayerId y) {
  PairSeries s;
  s.x = x;
  s.y = y;
  s.total_bins = store.total_bins();
  for (const auto& c : store.copresence(x, y)) {
    s.bins.push_back(c.bin);
  }
  std::sort(s.bins.begin(), s.bins.end());
  s.bins.erase(std::unique(s.bins.begin(), s.bins.end()), s.bins.end());
  return s;
}

PairUniverse enumerate_pairs(const EventStore& store, std::span<const PlayerId> focal) {
  PairUniverse u;
  for (PlayerId f : focal) {
    std::vector<PlayerId> others;
    for (std::uint32_t offset : store.player_events(store.player_index(f))) {
      for (const auto& ev : store.game_events(store.events()[offset].game_id)) {
        if (ev.player != f) others.push_back(ev.player);
      }
    }
    std::sort(others.begin(), others.end());
    others.erase(std::unique(others.begin(), others.end()), others.end());
    for (PlayerId o : others) u.pairs.emplace_back(f, o);
  }
  std::sort(u.pairs.begin(), u.pairs.end());
  return u;
}

}  // namespace ties
