#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "testutil.hpp"
#include "ties/rng.hpp"
#include "ties/temporal.hpp"

using namespace ties;
using namespace ties::test;

namespace {

constexpr std::int64_t kStart = 14866 * kSecondsPerDay;

PairSeries series_of(std::vector<BinIndex> bins, BinIndex total) {
  PairSeries s;
  s.x = 1;
  s.y = 2;
  s.bins = std::move(bins);
  s.total_bins = total;
  return s;
}

std::vector<BinIndex> random_bins(Rng& rng, std::size_t k, BinIndex total) {
  std::set<BinIndex> picks;
  while (picks.size() < k) picks.insert(static_cast<BinIndex>(rng.uniform(total)));
  return {picks.begin(), picks.end()};
}

}  // namespace

TEST_CASE("a single interaction has zero autocorrelation") {
  CHECK(autocorrelation(series_of({17}, 100)) == 0);
  CHECK(autocorrelation(series_of({}, 100)) == 0);
}

TEST_CASE("bins {0,3}: tau_max 3 counts the gap, tau_max 2 does not") {
  AcOptions opt;
  opt.tau_max = 3;
  CHECK(autocorrelation(series_of({0, 3}, 10), opt) == 1);
  opt.tau_max = 2;
  CHECK(autocorrelation(series_of({0, 3}, 10), opt) == 0);
}

TEST_CASE("tau_max below one is rejected") {
  AcOptions opt;
  opt.tau_max = 0;
  CHECK_THROWS_AS(autocorrelation(series_of({0, 3}, 10), opt), std::invalid_argument);
}

TEST_CASE("fft path equals the pairwise gap-count oracle on random sparse series") {
  Rng rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    const BinIndex total = 200 + static_cast<BinIndex>(rng.uniform(2000));
    const std::size_t k = 2 + rng.uniform(60);
    const auto bins = random_bins(rng, k, total);
    const auto tau = static_cast<std::uint32_t>(1 + rng.uniform(total));
    AcOptions fft{tau, AcMode::kFft, 64};
    AcOptions sparse{tau, AcMode::kSparse, 64};
    const std::uint64_t expected = oracle::gap_count_ac(bins, tau);
    CHECK(autocorrelation(series_of(bins, total), fft) == expected);
    CHECK(autocorrelation(series_of(bins, total), sparse) == expected);
  }
}

TEST_CASE("tau_max = T-1 degenerates to C(k,2)") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const BinIndex total = 50 + static_cast<BinIndex>(rng.uniform(500));
    const std::size_t k = 2 + rng.uniform(40);
    const auto bins = random_bins(rng, k, total);
    AcOptions opt;
    opt.tau_max = total - 1;
    opt.mode = trial % 2 ? AcMode::kFft : AcMode::kSparse;
    CHECK(autocorrelation(series_of(bins, total), opt) ==
          static_cast<std::uint64_t>(k) * (k - 1) / 2);
  }
}

TEST_CASE("autocorrelation is invariant under time translation") {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const BinIndex total = 5000;
    auto bins = random_bins(rng, 2 + rng.uniform(30), 1000);
    const auto shift = static_cast<BinIndex>(rng.uniform(3000));
    std::vector<BinIndex> shifted;
    for (BinIndex b : bins) shifted.push_back(b + shift);
    AcOptions opt;
    opt.tau_max = static_cast<std::uint32_t>(1 + rng.uniform(800));
    CHECK(autocorrelation(series_of(bins, total), opt) ==
          autocorrelation(series_of(shifted, total), opt));
  }
}

TEST_CASE("autocorrelation is monotone in tau_max") {
  Rng rng(31);
  auto bins = random_bins(rng, 25, 400);
  std::uint64_t prev = 0;
  for (std::uint32_t tau = 1; tau < 400; tau += 7) {
    AcOptions opt;
    opt.tau_max = tau;
    const std::uint64_t v = autocorrelation(series_of(bins, 400), opt);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("pair frequency trivials") {
  std::vector<InteractionEvent> events{
      make_event(1, kStart, 1, 0), make_event(1, kStart, 2, 1),
      make_event(2, kStart + 600, 1, 0), make_event(2, kStart + 600, 2, 0),
      make_event(3, kStart + 1200, 3, 0),
  };
  EventStore store = EventStore::build(events, kStart, kStart + kSecondsPerDay);
  SUBCASE("x plays only with y") {
    PairFrequency f = pair_frequency(store, 1, 2);
    CHECK(f.shared_games == 2);
    CHECK(f.normalized == doctest::Approx(1.0));
  }
  SUBCASE("no shared games") {
    PairFrequency f = pair_frequency(store, 1, 3);
    CHECK(f.shared_games == 0);
    CHECK(f.normalized == 0.0);
  }
  SUBCASE("unknown player errors") {
    CHECK_THROWS_AS(pair_frequency(store, 1, 42), InputError);
  }
}

TEST_CASE("entropy closed forms") {
  // Tuesday 2010-09-14 is day 14866; add whole days to move weekdays.
  std::vector<InteractionEvent> tuesday_only;
  for (GameId g = 1; g <= 5; ++g) {
    tuesday_only.push_back(make_event(g, kStart + 60 * static_cast<std::int64_t>(g), 9, 0, 3));
  }
  EventStore store = EventStore::build(tuesday_only, kStart, kStart + 8 * kSecondsPerDay);
  CHECK(entropy(store, 9, LocationKind::kSchedule) == doctest::Approx(0.0));
  CHECK(entropy(store, 9, LocationKind::kSpatial) == doctest::Approx(0.0));
  CHECK(entropy(store, 9, LocationKind::kJoint) == doctest::Approx(0.0));

  std::vector<InteractionEvent> uniform_week;
  for (int d = 0; d < 7; ++d) {
    uniform_week.push_back(
        make_event(100 + d, kStart + d * kSecondsPerDay + 120, 9, 0, d % 3));
  }
  EventStore week = EventStore::build(uniform_week, kStart, kStart + 8 * kSecondsPerDay);
  CHECK(entropy(week, 9, LocationKind::kSchedule) == doctest::Approx(std::log(7.0)).epsilon(1e-12));
}

TEST_CASE("entropy matches a direct histogram computation on mixed schedules") {
  Rng rng(59);
  std::vector<InteractionEvent> events;
  std::vector<std::uint64_t> day_counts(7, 0), playlist_counts(4, 0);
  std::vector<std::uint64_t> joint_counts(7 * 4, 0);
  for (GameId g = 1; g <= 300; ++g) {
    const int day = static_cast<int>(rng.uniform(7));
    const auto playlist = static_cast<std::uint16_t>(rng.uniform(4));
    const std::int64_t ts = kStart + day * kSecondsPerDay +
                            static_cast<std::int64_t>(rng.uniform(kSecondsPerDay));
    events.push_back(make_event(g, ts, 5, 0, playlist));
    const int wd = weekday_utc(ts);
    ++day_counts[wd];
    ++playlist_counts[playlist];
    ++joint_counts[wd * 4 + playlist];
  }
  EventStore store = EventStore::build(events, kStart, kStart + 8 * kSecondsPerDay);
  CHECK(entropy(store, 5, LocationKind::kSchedule) ==
        doctest::Approx(oracle::histogram_entropy(day_counts)).epsilon(1e-12));
  CHECK(entropy(store, 5, LocationKind::kSpatial) ==
        doctest::Approx(oracle::histogram_entropy(playlist_counts)).epsilon(1e-12));
  CHECK(entropy(store, 5, LocationKind::kJoint) ==
        doctest::Approx(oracle::histogram_entropy(joint_counts)).epsilon(1e-12));
}

TEST_CASE("entropy bounds and joint dominance") {
  Rng rng(61);
  std::vector<InteractionEvent> events;
  GameId g = 1;
  for (PlayerId agent = 1; agent <= 50; ++agent) {
    const int games = 1 + static_cast<int>(rng.uniform(40));
    for (int i = 0; i < games; ++i) {
      const std::int64_t ts = kStart + static_cast<std::int64_t>(rng.uniform(7 * kSecondsPerDay));
      events.push_back(make_event(g++, ts, agent, 0, static_cast<std::uint16_t>(rng.uniform(5))));
    }
  }
  EventStore store = EventStore::build(events, kStart, kStart + 8 * kSecondsPerDay);
  for (PlayerId agent = 1; agent <= 50; ++agent) {
    const double ht = entropy(store, agent, LocationKind::kSchedule);
    const double hs = entropy(store, agent, LocationKind::kSpatial);
    const double hj = entropy(store, agent, LocationKind::kJoint);
    CHECK(ht >= 0);
    CHECK(ht <= std::log(7.0) + 1e-12);
    CHECK(hs <= std::log(5.0) + 1e-12);
    CHECK(hj >= ht - 1e-12);
    CHECK(hj >= hs - 1e-12);
    CHECK(hj <= std::log(35.0) + 1e-12);
  }
}

TEST_CASE("pair entropy is the sum of individual entropies") {
  std::vector<InteractionEvent> events;
  // Player 1 uniform over 7 days, player 2 always the same day.
  for (int d = 0; d < 7; ++d) {
    events.push_back(make_event(1 + d, kStart + d * kSecondsPerDay, 1));
  }
  for (GameId g = 20; g < 24; ++g) {
    events.push_back(make_event(g, kStart + 3600 * static_cast<std::int64_t>(g), 2));
  }
  EventStore store = EventStore::build(events, kStart, kStart + 8 * kSecondsPerDay);
  CHECK(pair_entropy(store, 1, 2, LocationKind::kSchedule) ==
        doctest::Approx(std::log(7.0)).epsilon(1e-12));
  // Both single-location.
  CHECK(pair_entropy(store, 2, 2, LocationKind::kSpatial) == doctest::Approx(0.0));
}

TEST_CASE("fft crossover in auto mode agrees with both forced paths") {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const auto bins = random_bins(rng, 70 + rng.uniform(100), 10000);
    AcOptions automatic;  // crossover 64 -> fft
    AcOptions sparse{automatic.tau_max, AcMode::kSparse, 64};
    CHECK(autocorrelation(series_of(bins, 10000), automatic) ==
          autocorrelation(series_of(bins, 10000), sparse));
  }
}
