#include "ties/features.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

#include "ties/parallel.hpp"

namespace ties {

namespace {

struct EntropyTriple {
  double schedule = 0, spatial = 0, joint = 0;
};

// Per-player entropies in one pass over the events.
std::vector<EntropyTriple> entropy_table(const EventStore& store) {
  struct Histogram {
    std::unordered_map<std::uint32_t, std::uint64_t> schedule, spatial, joint;
    std::uint64_t total = 0;
  };
  std::vector<Histogram> hist(store.player_count());
  for (const auto& ev : store.events()) {
    Histogram& h = hist[store.player_index(ev.player)];
    const auto day = static_cast<std::uint32_t>(weekday_utc(ev.timestamp));
    ++h.schedule[day];
    ++h.spatial[ev.playlist];
    ++h.joint[day * 65536u + ev.playlist];
    ++h.total;
  }
  auto shannon = [](const std::unordered_map<std::uint32_t, std::uint64_t>& counts,
                    std::uint64_t total) {
    double h = 0.0;
    for (const auto& [key, count] : counts) {
      const double p = static_cast<double>(count) / static_cast<double>(total);
      h -= p * std::log(p);
    }
    return h < 0 ? 0.0 : h;
  };
  std::vector<EntropyTriple> out(store.player_count());
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (hist[i].total == 0) continue;
    out[i].schedule = shannon(hist[i].schedule, hist[i].total);
    out[i].spatial = shannon(hist[i].spatial, hist[i].total);
    out[i].joint = shannon(hist[i].joint, hist[i].total);
  }
  return out;
}

// Accumulator for one (focal, other) pair while scanning the focal player's
// games in time order.
struct PairAccumulator {
  std::vector<BinIndex> bins;  // nondecreasing as collected
  std::uint64_t shared_games = 0;
  std::uint64_t assists = 0;
  std::uint64_t indirect = 0;
  std::uint64_t betrayals = 0;
};

std::vector<PairFeatures> focal_rows(const EventStore& store, PlayerId focal,
                                     const EntropyTriple* entropies,
                                     const FeatureOptions& options) {
  const std::uint32_t fi = store.player_index(focal);
  std::unordered_map<PlayerId, PairAccumulator> acc;
  const std::uint64_t n_x = store.player_events(fi).size();
  for (std::uint32_t offset : store.player_events(fi)) {
    const InteractionEvent& fe = store.events()[offset];
    const BinIndex bin = store.bin_of(fe.timestamp);
    for (const auto& ev : store.game_events(fe.game_id)) {
      if (ev.player == focal) continue;
      PairAccumulator& a = acc[ev.player];
      ++a.shared_games;
      if (a.bins.empty() || a.bins.back() != bin) a.bins.push_back(bin);
      if (ev.team == fe.team) {
        a.assists += fe.direct_assists;
        a.indirect += fe.indirect_assists;
      } else {
        a.betrayals += fe.betrayals;
      }
    }
  }
  std::vector<PairFeatures> rows;
  rows.reserve(acc.size());
  for (auto& [other, a] : acc) {
    // Player events are time-ordered but same-bin repeats and equal
    // timestamps keep the list only nondecreasing; dedupe to the indicator.
    std::sort(a.bins.begin(), a.bins.end());
    a.bins.erase(std::unique(a.bins.begin(), a.bins.end()), a.bins.end());
    PairSeries series{focal, other, std::move(a.bins), store.total_bins()};
    PairFeatures row;
    row.x = focal;
    row.y = other;
    row.values[kFeatAc] = static_cast<double>(autocorrelation(series, options.ac));
    row.values[kFeatPairFreq] = static_cast<double>(a.shared_games);
    row.values[kFeatNormPairFreq] =
        static_cast<double>(a.shared_games) / static_cast<double>(n_x);
    const EntropyTriple& ef = entropies[fi];
    const EntropyTriple& eo = entropies[store.player_index(other)];
    row.values[kFeatScheduleEntropy] = ef.schedule + eo.schedule;
    row.values[kFeatSpatialEntropy] = ef.spatial + eo.spatial;
    row.values[kFeatJointEntropy] = ef.joint + eo.joint;
    row.values[kFeatAssists] = static_cast<double>(a.assists);
    row.values[kFeatIndirect] = static_cast<double>(a.indirect);
    row.values[kFeatBetrayals] = static_cast<double>(a.betrayals);
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const PairFeatures& a, const PairFeatures& b) { return a.y < b.y; });
  return rows;
}

}  // namespace

int feature_index(std::string_view name) {
  for (std::size_t i = 0; i < kFeatureNames.size(); ++i) {
    if (kFeatureNames[i] == name) return static_cast<int>(i);
  }
  throw UsageError("unknown feature name: " + std::string(name));
}

PairFeatures compute_pair_features(const EventStore& store, PlayerId x, PlayerId y,
                                   const FeatureOptions& options) {
  PairFeatures row;
  row.x = x;
  row.y = y;
  PairSeries series = build_series(store, x, y);
  row.values[kFeatAc] = static_cast<double>(autocorrelation(series, options.ac));
  PairFrequency freq = pair_frequency(store, x, y);
  row.values[kFeatPairFreq] = static_cast<double>(freq.shared_games);
  row.values[kFeatNormPairFreq] = freq.normalized;
  row.values[kFeatScheduleEntropy] = pair_entropy(store, x, y, LocationKind::kSchedule);
  row.values[kFeatSpatialEntropy] = pair_entropy(store, x, y, LocationKind::kSpatial);
  row.values[kFeatJointEntropy] = pair_entropy(store, x, y, LocationKind::kJoint);
  CooperativeCounts coop = cooperative_counts(store, x, y);
  row.values[kFeatAssists] = static_cast<double>(coop.direct_assists);
  row.values[kFeatIndirect] = static_cast<double>(coop.indirect_assists);
  row.values[kFeatBetrayals] = static_cast<double>(coop.betrayals);
  return row;
}

void for_each_focal_features(const EventStore& store, std::span<const PlayerId> focal,
                             const FeatureOptions& options,
                             const std::function<void(std::span<const PairFeatures>)>& sink) {
  std::vector<PlayerId> order(focal.begin(), focal.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (PlayerId f : order) store.player_index(f);  // validate up front

  const std::vector<EntropyTriple> entropies = entropy_table(store);

  // Process in blocks: parallel feature extraction inside a block, then a
  // sequential in-order flush to the sink.
  const std::size_t block = 256;
  std::vector<std::vector<PairFeatures>> slot(std::min(block, order.size()));
  for (std::size_t base = 0; base < order.size(); base += block) {
    const std::size_t count = std::min(block, order.size() - base);
    parallel_for(count, options.threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        slot[i] = focal_rows(store, order[base + i], entropies.data(), options);
      }
    });
    for (std::size_t i = 0; i < count; ++i) {
      sink(slot[i]);
      slot[i].clear();
    }
  }
}

std::vector<PairFeatures> compute_features(const EventStore& store,
                                           std::span<const PlayerId> focal,
                                           const FeatureOptions& options) {
  std::vector<PairFeatures> out;
  for_each_focal_features(store, focal, options, [&](std::span<const PairFeatures> rows) {
    out.insert(out.end(), rows.begin(), rows.end());
  });
  return out;
}

}  // namespace ties
