#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "testutil.hpp"
#include "ties/events.hpp"
#include "ties/rng.hpp"

using namespace ties;
using namespace ties::test;

namespace {

constexpr std::int64_t kStart = 14866 * kSecondsPerDay;  // midnight UTC
constexpr std::int64_t kEnd = kStart + 10 * kSecondsPerDay;

std::string header() {
  std::ostringstream out;
  out << "# " << kStart << " " << kEnd << "\n";
  return out.str();
}

std::string record(GameId g, std::int64_t ts, int playlist, int team, PlayerId p, int a = 0,
                   int v = 0, int b = 0) {
  std::ostringstream out;
  out << g << "\t" << ts << "\t" << playlist << "\t" << team << "\t" << p << "\t" << a << "\t"
      << v << "\t" << b << "\n";
  return out.str();
}

}  // namespace

TEST_CASE("empty file yields an empty store") {
  TempDir tmp;
  write_file(tmp.file("log.tsv"), header());
  EventStore store = EventStore::ingest(tmp.file("log.tsv"));
  CHECK(store.event_count() == 0);
  CHECK(store.player_count() == 0);
  CHECK(store.game_count() == 0);
}

TEST_CASE("one 4v4 game ingests as 8 events, 1 game, 8 players") {
  TempDir tmp;
  std::string text = header();
  for (int p = 0; p < 8; ++p) text += record(1, kStart + 600, 2, p / 4, 100 + p);
  write_file(tmp.file("log.tsv"), text);
  EventStore store = EventStore::ingest(tmp.file("log.tsv"));
  CHECK(store.event_count() == 8);
  CHECK(store.game_count() == 1);
  CHECK(store.player_count() == 8);
  CHECK(store.games_played(104) == 1);
}

TEST_CASE("malformed line reports its line number") {
  TempDir tmp;
  std::string text = header();
  text += record(1, kStart, 0, 0, 5);
  text += "this is not a record\n";
  write_file(tmp.file("log.tsv"), text);
  try {
    EventStore::ingest(tmp.file("log.tsv"));
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("timestamp outside the declared window is rejected") {
  TempDir tmp;
  write_file(tmp.file("log.tsv"), header() + record(1, kEnd + 5, 0, 0, 5));
  CHECK_THROWS_AS(EventStore::ingest(tmp.file("log.tsv")), FormatError);
}

TEST_CASE("duplicate (game, player) is rejected") {
  TempDir tmp;
  write_file(tmp.file("log.tsv"),
             header() + record(1, kStart, 0, 0, 5) + record(1, kStart, 0, 1, 5));
  CHECK_THROWS_AS(EventStore::ingest(tmp.file("log.tsv")), FormatError);
}

TEST_CASE("records before the window declaration are rejected") {
  TempDir tmp;
  write_file(tmp.file("log.tsv"), record(1, kStart, 0, 0, 5) + header());
  CHECK_THROWS_AS(EventStore::ingest(tmp.file("log.tsv")), FormatError);
}

TEST_CASE("one game with two timestamps is rejected") {
  TempDir tmp;
  write_file(tmp.file("log.tsv"),
             header() + record(1, kStart, 0, 0, 5) + record(1, kStart + 600, 0, 1, 6));
  CHECK_THROWS_AS(EventStore::ingest(tmp.file("log.tsv")), FormatError);
}

TEST_CASE("ingest-then-dump round-trips bit-identically") {
  TempDir tmp;
  // Records deliberately out of canonical order.
  std::string text = header();
  text += record(7, kStart + 1200, 1, 0, 30, 2, 0, 1);
  text += record(7, kStart + 1200, 1, 1, 31);
  text += record(3, kStart + 600, 0, 0, 30);
  text += record(3, kStart + 600, 0, 1, 32, 0, 1, 0);
  write_file(tmp.file("log.tsv"), text);
  EventStore store = EventStore::ingest(tmp.file("log.tsv"));
  store.dump(tmp.file("dump1.tsv"));
  EventStore again = EventStore::ingest(tmp.file("dump1.tsv"));
  again.dump(tmp.file("dump2.tsv"));
  CHECK(read_file(tmp.file("dump1.tsv")) == read_file(tmp.file("dump2.tsv")));
  CHECK(read_file(tmp.file("dump1.tsv")) != "");
}

TEST_CASE("sum of per-player game counts equals the event count") {
  Rng rng(7);
  std::vector<InteractionEvent> events;
  GameId game = 1;
  for (int g = 0; g < 50; ++g) {
    const std::int64_t ts = kStart + static_cast<std::int64_t>(rng.uniform(9 * 86400));
    const int players = 2 + static_cast<int>(rng.uniform(7));
    std::vector<PlayerId> in_game;
    for (int p = 0; p < players; ++p) {
      const PlayerId id = 1 + rng.uniform(20);
      if (std::find(in_game.begin(), in_game.end(), id) != in_game.end()) continue;
      in_game.push_back(id);
      events.push_back(make_event(game, ts, id, p % 2));
    }
    ++game;
  }
  EventStore store = EventStore::build(events, kStart, kEnd);
  std::uint64_t total = 0;
  for (PlayerId id : store.players()) total += store.games_played(id);
  CHECK(total == store.event_count());
}

TEST_CASE("binning invariant: 600*bin <= ts - epoch < 600*(bin+1)") {
  Rng rng(11);
  std::vector<InteractionEvent> events;
  for (GameId g = 1; g <= 200; ++g) {
    const std::int64_t ts = kStart + static_cast<std::int64_t>(rng.uniform(10 * 86400));
    events.push_back(make_event(g, ts, 1));
  }
  EventStore store = EventStore::build(events, kStart, kEnd);
  for (const auto& ev : store.events()) {
    const std::int64_t offset = ev.timestamp - store.epoch_start();
    const BinIndex bin = store.bin_of(ev.timestamp);
    CHECK(600 * static_cast<std::int64_t>(bin) <= offset);
    CHECK(offset < 600 * (static_cast<std::int64_t>(bin) + 1));
    CHECK(bin < store.total_bins());
  }
}

TEST_CASE("epoch is anchored to midnight even for a mid-day window start") {
  const std::int64_t start = kStart + 5000;  // not midnight
  std::vector<InteractionEvent> events{make_event(1, start + 100, 9)};
  EventStore store = EventStore::build(events, start, kEnd);
  CHECK(store.epoch_start() == kStart);
  CHECK(store.epoch_start() % kSecondsPerDay == 0);
}

TEST_CASE("games_of: unknown player errors, known player lists time-sorted games") {
  std::vector<InteractionEvent> events{
      make_event(2, kStart + 1800, 5, 0, 3),
      make_event(1, kStart + 600, 5, 1, 2),
      make_event(1, kStart + 600, 6, 0, 2),
  };
  EventStore store = EventStore::build(events, kStart, kEnd);
  CHECK_THROWS_AS(store.games_of(999), InputError);
  auto games = store.games_of(5);
  REQUIRE(games.size() == 2);
  CHECK(games[0].game_id == 1);
  CHECK(games[1].game_id == 2);
  CHECK(games[0].playlist == 2);
  CHECK(games[0].team == 1);
  auto one = store.games_of(6);
  CHECK(one.size() == 1);
}

TEST_CASE("copresence matches a brute-force scan and is symmetric") {
  Rng rng(3);
  std::vector<InteractionEvent> events;
  for (GameId g = 1; g <= 120; ++g) {
    const std::int64_t ts = kStart + static_cast<std::int64_t>(rng.uniform(10 * 86400));
    std::vector<PlayerId> players;
    const int n = 2 + static_cast<int>(rng.uniform(6));
    for (int p = 0; p < n; ++p) {
      PlayerId id = 1 + rng.uniform(15);
      if (std::find(players.begin(), players.end(), id) == players.end()) {
        players.push_back(id);
        events.push_back(make_event(g, ts, id, static_cast<std::uint16_t>(p % 2),
                                    static_cast<std::uint16_t>(rng.uniform(4))));
      }
    }
  }
  EventStore store = EventStore::build(events, kStart, kEnd);

  auto brute_shared = [&](PlayerId x, PlayerId y) {
    // Full scan over all events.
    std::vector<GameId> gx, gy;
    for (const auto& ev : events) {
      if (ev.player == x) gx.push_back(ev.game_id);
      if (ev.player == y) gy.push_back(ev.game_id);
    }
    std::sort(gx.begin(), gx.end());
    std::sort(gy.begin(), gy.end());
    std::vector<GameId> shared;
    std::set_intersection(gx.begin(), gx.end(), gy.begin(), gy.end(),
                          std::back_inserter(shared));
    return shared;
  };

  for (PlayerId x = 1; x <= 15; ++x) {
    for (PlayerId y = x + 1; y <= 15; ++y) {
      if (!store.has_player(x) || !store.has_player(y)) continue;
      auto cp = store.copresence(x, y);
      auto expected = brute_shared(x, y);
      CHECK(cp.size() == expected.size());
      auto cp_rev = store.copresence(y, x);
      REQUIRE(cp.size() == cp_rev.size());
      for (std::size_t i = 0; i < cp.size(); ++i) {
        CHECK(cp[i].game_id == cp_rev[i].game_id);
        CHECK(cp[i].bin == cp_rev[i].bin);
        CHECK(cp[i].same_team == cp_rev[i].same_team);
        // Counter roles swap with the argument order.
        CHECK(cp[i].x_assists == cp_rev[i].y_assists);
        CHECK(cp[i].y_betrayals == cp_rev[i].x_betrayals);
      }
      const bool sorted = std::is_sorted(cp.begin(), cp.end(),
                                         [](const Copresence& a, const Copresence& b) {
                                           return a.bin < b.bin;
                                         });
      CHECK(sorted);
    }
  }
}

TEST_CASE("players never co-appearing have empty copresence") {
  std::vector<InteractionEvent> events{
      make_event(1, kStart, 1),
      make_event(2, kStart + 600, 2),
  };
  EventStore store = EventStore::build(events, kStart, kEnd);
  CHECK(store.copresence(1, 2).empty());
  CHECK_THROWS_AS(store.copresence(1, 99), InputError);
}

TEST_CASE("multiple games of a pair in one bin are retained with multiplicity") {
  std::vector<InteractionEvent> events{
      make_event(1, kStart + 10, 1, 0), make_event(1, kStart + 10, 2, 1),
      make_event(2, kStart + 20, 1, 0), make_event(2, kStart + 20, 2, 0),
  };
  EventStore store = EventStore::build(events, kStart, kEnd);
  auto cp = store.copresence(1, 2);
  REQUIRE(cp.size() == 2);
  CHECK(cp[0].bin == cp[1].bin);
}
