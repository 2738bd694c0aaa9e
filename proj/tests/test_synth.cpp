#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "testutil.hpp"
#include "ties/cooperative.hpp"
#include "ties/synth.hpp"
#include "ties/temporal.hpp"

using namespace ties;
using namespace ties::test;

namespace {

WorldConfig small_config(std::uint64_t seed = 7) {
  WorldConfig cfg;
  cfg.agents = 120;
  cfg.days = 14;
  cfg.seed = seed;
  cfg.activity_median = 0.5;
  return cfg;
}

}  // namespace

TEST_CASE("identical config and seed reproduce the world byte for byte") {
  TempDir tmp;
  World a = generate(small_config());
  World b = generate(small_config());
  REQUIRE(a.events.size() == b.events.size());
  a.to_store().dump(tmp.file("a.tsv"));
  b.to_store().dump(tmp.file("b.tsv"));
  CHECK(read_file(tmp.file("a.tsv")) == read_file(tmp.file("b.tsv")));
  CHECK(a.labels == b.labels);

  World c = generate(small_config(8));
  CHECK(a.events.size() != c.events.size());
}

TEST_CASE("zero activity rate emits an empty log") {
  WorldConfig cfg = small_config();
  cfg.activity_median = 0.0;
  World world = generate(cfg);
  CHECK(world.events.empty());
  CHECK(world.truth.emitted_games == 0);
}

TEST_CASE("a lone agent yields no games and reports the degenerate world") {
  WorldConfig cfg = small_config();
  cfg.agents = 1;
  cfg.friend_degree = 0;
  cfg.activity_median = 2.0;
  World world = generate(cfg);
  CHECK(world.events.empty());
  CHECK(world.truth.emitted_games == 0);
  CHECK(world.truth.dropped_games > 0);  // assemblies with an empty opposing team
}

TEST_CASE("config invariant violations are rejected") {
  WorldConfig cfg = small_config();
  cfg.friend_session_mean = 1.0;  // must exceed the solo mean
  CHECK_THROWS_AS(generate(cfg), InputError);
  cfg = small_config();
  cfg.party_probability = 1.5;
  CHECK_THROWS_AS(generate(cfg), InputError);
  cfg = small_config();
  cfg.friend_degree = 7;
  CHECK_THROWS_AS(generate(cfg), InputError);
}

TEST_CASE("ledger exactly matches features recomputed from the emitted log") {
  World world = generate(small_config(42));
  EventStore store = world.to_store();

  CHECK(store.event_count() == world.truth.emitted_events);
  CHECK(store.game_count() == world.truth.emitted_games);

  // N_x for every agent, including inactive ones.
  for (std::uint32_t agent = 0; agent < world.config.agents; ++agent) {
    const std::uint64_t expected = world.truth.games_per_agent[agent];
    if (expected == 0) {
      CHECK(!store.has_player(agent));
    } else {
      CHECK(store.games_played(agent) == expected);
    }
  }

  // Per-pair ledger vs recomputation through the public feature routes.
  std::uint64_t checked = 0;
  for (const auto& [key, ledger] : world.truth.pairs) {
    const PlayerId lo = key >> 32;
    const PlayerId hi = key & 0xffffffffu;
    CHECK(pair_frequency(store, lo, hi).shared_games == ledger.shared_games);
    CooperativeCounts lo_hi = cooperative_counts(store, lo, hi);
    CooperativeCounts hi_lo = cooperative_counts(store, hi, lo);
    CHECK(lo_hi.direct_assists == ledger.assists_lo_hi);
    CHECK(hi_lo.direct_assists == ledger.assists_hi_lo);
    CHECK(lo_hi.indirect_assists == ledger.indirect_lo_hi);
    CHECK(hi_lo.indirect_assists == ledger.indirect_hi_lo);
    CHECK(lo_hi.betrayals == ledger.betrayals_lo_hi);
    CHECK(hi_lo.betrayals == ledger.betrayals_hi_lo);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("profile: constant configuration gives equal rates in all bins") {
  WorldConfig cfg = small_config();
  cfg.diurnal_amplitude = 0.0;
  cfg.weekend_multiplier = 1.0;
  const double first = profile_intensity(cfg, 0);
  for (BinIndex b = 1; b < 144 * 7; ++b) {
    CHECK(profile_intensity(cfg, b) == doctest::Approx(first));
  }
}

TEST_CASE("profile peaks in the afternoon and troughs in the early morning") {
  WorldConfig cfg = small_config();
  // 16:00 vs 04:30, same day (bins are 10 minutes).
  const BinIndex four_pm = 16 * 6;
  const BinIndex half_past_four_am = 4 * 6 + 3;
  CHECK(profile_intensity(cfg, four_pm) > profile_intensity(cfg, half_past_four_am));
}

TEST_CASE("weekly integral reflects the weekend multiplier within 1%") {
  WorldConfig cfg = small_config();
  cfg.weekend_multiplier = 1.5;
  // Day 0 (2010-09-14) is a Tuesday; Saturday is day offset 4.
  const int bins_per_day = 144;
  double tuesday = 0, saturday = 0;
  for (int b = 0; b < bins_per_day; ++b) {
    tuesday += profile_intensity(cfg, b);
    saturday += profile_intensity(cfg, 4 * bins_per_day + b);
  }
  CHECK(saturday / tuesday == doctest::Approx(1.5).epsilon(0.01));
}

TEST_CASE("activity is heavy tailed: top decile of agents produces most events") {
  World world = generate(small_config(42));
  std::vector<std::uint64_t> per_agent = world.truth.games_per_agent;
  std::sort(per_agent.begin(), per_agent.end(), std::greater<>());
  const std::uint64_t total = std::accumulate(per_agent.begin(), per_agent.end(), 0ull);
  REQUIRE(total > 0);
  std::uint64_t top = 0;
  for (std::size_t i = 0; i < per_agent.size() / 10; ++i) top += per_agent[i];
  CHECK(static_cast<double>(top) / static_cast<double>(total) > 0.5);
}

TEST_CASE("friend pairs share more games on average than stranger pairs") {
  World world = generate(small_config(42));
  double friend_sum = 0, friend_n = 0, other_sum = 0, other_n = 0;
  for (const auto& [key, ledger] : world.truth.pairs) {
    const auto lo = static_cast<std::uint32_t>(key >> 32);
    const auto hi = static_cast<std::uint32_t>(key & 0xffffffffu);
    if (world.truth.are_friends(lo, hi)) {
      friend_sum += static_cast<double>(ledger.shared_games);
      ++friend_n;
    } else {
      other_sum += static_cast<double>(ledger.shared_games);
      ++other_n;
    }
  }
  REQUIRE(friend_n > 0);
  REQUIRE(other_n > 0);
  CHECK(friend_sum / friend_n > other_sum / other_n);
}

TEST_CASE("betrayals: friend pairs have the larger mean and variance") {
  WorldConfig cfg = small_config(42);
  cfg.agents = 300;
  cfg.days = 21;
  World world = generate(cfg);
  // Directed betrayal totals over pairs that met on opposite teams at least
  // once, split by friendship.
  std::vector<double> friend_b, other_b;
  for (const auto& [key, ledger] : world.truth.pairs) {
    const auto lo = static_cast<std::uint32_t>(key >> 32);
    const auto hi = static_cast<std::uint32_t>(key & 0xffffffffu);
    const double total =
        static_cast<double>(ledger.betrayals_lo_hi + ledger.betrayals_hi_lo) / 2.0;
    if (world.truth.are_friends(lo, hi)) {
      friend_b.push_back(total);
    } else {
      other_b.push_back(total);
    }
  }
  REQUIRE(friend_b.size() > 30);
  REQUIRE(other_b.size() > 1000);
  auto mean = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  };
  auto variance = [&](const std::vector<double>& v) {
    const double m = mean(v);
    double acc = 0;
    for (double x : v) acc += (x - m) * (x - m);
    return acc / static_cast<double>(v.size());
  };
  CHECK(mean(friend_b) > mean(other_b));
  CHECK(variance(friend_b) > variance(other_b));
}

TEST_CASE("labels cover exactly the co-played friend pairs, both directions") {
  World world = generate(small_config(42));
  std::set<std::pair<PlayerId, PlayerId>> label_set(world.labels.begin(), world.labels.end());
  for (const auto& [lo, hi] : world.truth.friendships) {
    auto it = world.truth.pairs.find(pair_key(lo, hi));
    const bool played = it != world.truth.pairs.end() && it->second.shared_games > 0;
    CHECK(label_set.count({lo, hi}) == played);
    CHECK(label_set.count({hi, lo}) == played);
  }
  // No label without a friendship.
  for (const auto& [a, b] : world.labels) {
    CHECK(world.truth.are_friends(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
  }
}

TEST_CASE("world files round-trip through the store and config parser") {
  TempDir tmp;
  WorldConfig cfg = small_config(5);
  World world = generate(cfg);
  write_world(world, tmp.path());

  EventStore store = EventStore::ingest(tmp.file("events.tsv"));
  CHECK(store.event_count() == world.events.size());

  WorldConfig parsed = parse_world_config(tmp.file("config.cfg"));
  CHECK(parsed.agents == cfg.agents);
  CHECK(parsed.seed == cfg.seed);
  CHECK(parsed.activity_median == cfg.activity_median);

  // Regenerating from the parsed config reproduces the same events file.
  World again = generate(parsed);
  TempDir tmp2;
  write_world(again, tmp2.path());
  CHECK(read_file(tmp.file("events.tsv")) == read_file(tmp2.file("events.tsv")));
  CHECK(read_file(tmp.file("labels.tsv")) == read_file(tmp2.file("labels.tsv")));
}

TEST_CASE("session lengths: friend parties play longer runs than solo players") {
  World world = generate(small_config(42));
  EventStore store = world.to_store();
  // Mean shared-session length for friend pairs (games per shared session)
  // exceeds the solo session mean by construction.
  double friend_run = 0, runs = 0;
  for (const auto& [key, ledger] : world.truth.pairs) {
    const auto lo = static_cast<std::uint32_t>(key >> 32);
    const auto hi = static_cast<std::uint32_t>(key & 0xffffffffu);
    if (!world.truth.are_friends(lo, hi)) continue;
    friend_run += static_cast<double>(ledger.shared_games);
    runs += static_cast<double>(ledger.shared_sessions);
  }
  REQUIRE(runs > 0);
  CHECK(friend_run / runs > world.config.solo_session_mean);
}
