#include "ties/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <span>
#include <type_traits>

#include "ties/rng.hpp"

namespace ties {

namespace {

struct Session {
  std::uint32_t id;
  std::uint16_t playlist;
  std::vector<std::uint32_t> members;  // initiator first
  BinIndex end_bin;                    // exclusive
};

struct Placement {
  std::uint32_t agent;
  std::uint32_t session;
  std::uint16_t team;
};

class Generator {
 public:
  Generator(const WorldConfig& config) : cfg_(config), rng_(config.seed) {}

  World run() {
    cfg_.validate();
    truth_.games_per_agent.assign(cfg_.agents, 0);
    draw_agent_traits();
    build_friendships();
    draw_schedules();
    simulate();
    finish();
    World world;
    world.config = cfg_;
    world.events = std::move(events_);
    world.truth = std::move(truth_);
    world.labels = make_labels(world.truth);
    return world;
  }

 private:
  void build_friendships() {
    const std::uint32_t n = cfg_.agents;
    adjacency_.assign(n, {});
    if (n < 2 || cfg_.friend_degree == 0) {
      truth_.friendships.clear();
      return;
    }
    // Ring positions ordered by activity: lattice friends have similar
    // rates (homophily), so casual players also have mostly casual
    // friends. Rewired edges stay uniform.
    std::vector<std::uint32_t> ring(n);
    for (std::uint32_t i = 0; i < n; ++i) ring[i] = i;
    std::sort(ring.begin(), ring.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (rates_[a] != rates_[b]) return rates_[a] < rates_[b];
      return a < b;
    });
    const std::uint32_t half = std::min(cfg_.friend_degree / 2, (n - 1) / 2);
    std::vector<std::set<std::uint32_t>> adj(n);
    for (std::uint32_t lane = 1; lane <= half; ++lane) {
      for (std::uint32_t pos = 0; pos < n; ++pos) {
        const std::uint32_t i = ring[pos];
        const std::uint32_t j = ring[(pos + lane) % n];
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
    // Rewire the far endpoint of each lattice edge with fixed probability.
    for (std::uint32_t lane = 1; lane <= half; ++lane) {
      for (std::uint32_t pos = 0; pos < n; ++pos) {
        const std::uint32_t i = ring[pos];
        const std::uint32_t j = ring[(pos + lane) % n];
        if (!adj[i].count(j)) continue;  // already rewired away
        if (!rng_.bernoulli(cfg_.friend_rewire)) continue;
        if (adj[i].size() >= n - 1) continue;  // saturated
        std::uint32_t target;
        do {
          target = static_cast<std::uint32_t>(rng_.uniform(n));
        } while (target == i || adj[i].count(target));
        adj[i].erase(j);
        adj[j].erase(i);
        adj[i].insert(target);
        adj[target].insert(i);
      }
    }
    truth_.friendships.clear();
    for (std::uint32_t i = 0; i < n; ++i) {
      adjacency_[i].assign(adj[i].begin(), adj[i].end());
      for (std::uint32_t j : adj[i]) {
        if (i < j) truth_.friendships.emplace_back(i, j);
      }
    }
    std::sort(truth_.friendships.begin(), truth_.friendships.end());
  }

  void draw_agent_traits() {
    rates_.resize(cfg_.agents);
    favorite_.resize(cfg_.agents);
    const double mu = cfg_.activity_median > 0 ? std::log(cfg_.activity_median) : 0.0;
    for (std::uint32_t i = 0; i < cfg_.agents; ++i) {
      rates_[i] = cfg_.activity_median > 0 ? rng_.lognormal(mu, cfg_.activity_sigma) : 0.0;
      favorite_[i] = static_cast<std::uint16_t>(rng_.uniform(cfg_.playlist_count));
    }
  }

  void draw_schedules() {
    total_bins_ = cfg_.days * static_cast<std::uint32_t>(kSecondsPerDay / cfg_.bin_seconds);
    std::vector<double> cumulative(total_bins_);
    double acc = 0;
    for (BinIndex b = 0; b < total_bins_; ++b) {
      acc += profile_intensity(cfg_, b);
      cumulative[b] = acc;
    }
    starts_.clear();
    for (std::uint32_t agent = 0; agent < cfg_.agents; ++agent) {
      const double expected = rates_[agent] * static_cast<double>(cfg_.days);
      const std::uint64_t sessions = rng_.poisson(expected);
      for (std::uint64_t s = 0; s < sessions; ++s) {
        const BinIndex bin = static_cast<BinIndex>(rng_.categorical(cumulative));
        starts_.emplace_back(bin, agent);
      }
    }
    std::sort(starts_.begin(), starts_.end());
  }

  void start_session(std::uint32_t initiator, BinIndex bin) {
    Session s;
    s.id = next_session_id_++;
    s.members.push_back(initiator);
    if (rng_.bernoulli(cfg_.party_probability)) {
      for (std::uint32_t friend_id : adjacency_[initiator]) {
        if (s.members.size() >= cfg_.team_size) break;
        if (busy_until_[friend_id] > bin) continue;
        if (rng_.bernoulli(cfg_.friend_join_probability)) {
          s.members.push_back(friend_id);
        }
      }
    }
    const double mean =
        s.members.size() >= 2 ? cfg_.friend_session_mean : cfg_.solo_session_mean;
    const std::uint64_t length = rng_.geometric_mean(mean);
    s.end_bin = static_cast<BinIndex>(
        std::min<std::uint64_t>(bin + length, total_bins_));
    s.playlist = rng_.bernoulli(cfg_.favorite_playlist_probability)
                     ? favorite_[initiator]
                     : static_cast<std::uint16_t>(rng_.uniform(cfg_.playlist_count));
    for (std::uint32_t m : s.members) busy_until_[m] = s.end_bin;
    active_.push_back(std::move(s));
  }

  void simulate() {
    busy_until_.assign(cfg_.agents, 0);
    active_.clear();
    std::size_t cursor = 0;
    for (BinIndex bin = 0; bin < total_bins_; ++bin) {
      std::erase_if(active_, [bin](const Session& s) { return s.end_bin <= bin; });
      while (cursor < starts_.size() && starts_[cursor].first == bin) {
        const std::uint32_t agent = starts_[cursor].second;
        ++cursor;
        if (busy_until_[agent] > bin) {
          ++truth_.skipped_sessions;
          continue;
        }
        start_session(agent, bin);
      }
      if (active_.empty()) continue;
      matchmake(bin);
    }
  }

  void matchmake(BinIndex bin) {
    // Bucket active sessions by playlist, in creation order.
    std::vector<std::uint16_t> seen;
    for (const Session& s : active_) seen.push_back(s.playlist);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (std::uint16_t playlist : seen) {
      std::vector<std::size_t> bucket;
      for (std::size_t i = 0; i < active_.size(); ++i) {
        if (active_[i].playlist == playlist) bucket.push_back(i);
      }
      rng_.shuffle(bucket);
      pack_games(bin, playlist, bucket);
    }
  }

  void pack_games(BinIndex bin, std::uint16_t playlist, std::span<const std::size_t> bucket) {
    std::vector<Placement> game;
    std::array<std::uint32_t, 2> fill{0, 0};
    auto flush = [&] {
      if (!game.empty()) emit_game(bin, playlist, game, fill);
      game.clear();
      fill = {0, 0};
    };
    for (std::size_t idx : bucket) {
      const Session& s = active_[idx];
      const auto size = static_cast<std::uint32_t>(s.members.size());
      std::uint32_t free0 = cfg_.team_size - fill[0];
      std::uint32_t free1 = cfg_.team_size - fill[1];
      if (size > free0 && size > free1) {
        flush();
        free0 = cfg_.team_size;
        free1 = cfg_.team_size;
      }
      const std::uint16_t team = free0 >= free1 ? 0 : 1;
      for (std::uint32_t m : s.members) game.push_back({m, s.id, team});
      fill[team] += size;
      // The matchmaking quirk: a party occasionally loses a member to the
      // opposing side for this one game.
      if (size >= 2 && rng_.bernoulli(cfg_.friend_split_probability)) {
        const std::uint16_t other = 1 - team;
        if (fill[other] < cfg_.team_size) {
          game.back().team = other;
          --fill[team];
          ++fill[other];
        }
      }
    }
    flush();
  }

  void emit_game(BinIndex bin, std::uint16_t playlist, std::vector<Placement>& placements,
                 const std::array<std::uint32_t, 2>& fill) {
    if (fill[0] == 0 || fill[1] == 0) {
      ++truth_.dropped_games;
      return;
    }
    if (fill[0] + fill[1] < 2 * cfg_.team_size) ++truth_.undersized_games;
    const GameId game_id = ++next_game_id_;
    const std::int64_t ts =
        cfg_.window_start() + static_cast<std::int64_t>(bin) * cfg_.bin_seconds;
    // Team 0 placements first, each team in placement order.
    std::stable_sort(placements.begin(), placements.end(),
                     [](const Placement& a, const Placement& b) { return a.team < b.team; });

    const bool vehicle = playlist < cfg_.vehicle_playlists;
    std::vector<std::uint32_t> assists(placements.size()), indirect(placements.size()),
        betray(placements.size());
    for (std::size_t i = 0; i < placements.size(); ++i) {
      std::uint32_t same_team_friends = 0, opposing_friends = 0;
      for (std::size_t j = 0; j < placements.size(); ++j) {
        if (i == j) continue;
        if (!truth_.are_friends(placements[i].agent, placements[j].agent)) continue;
        if (placements[i].team == placements[j].team) {
          ++same_team_friends;
        } else {
          ++opposing_friends;
        }
      }
      assists[i] = static_cast<std::uint32_t>(
          rng_.poisson(cfg_.assist_base + cfg_.assist_friend_bonus * same_team_friends));
      indirect[i] = vehicle
                        ? static_cast<std::uint32_t>(rng_.poisson(
                              cfg_.indirect_base + cfg_.indirect_friend_bonus * same_team_friends))
                        : 0;
      betray[i] = static_cast<std::uint32_t>(
          rng_.poisson(cfg_.betrayal_base + cfg_.betrayal_friend_bonus * opposing_friends));
    }

    for (std::size_t i = 0; i < placements.size(); ++i) {
      InteractionEvent ev;
      ev.game_id = game_id;
      ev.timestamp = ts;
      ev.playlist = playlist;
      ev.team = placements[i].team;
      ev.player = placements[i].agent;
      ev.direct_assists = assists[i];
      ev.indirect_assists = indirect[i];
      ev.betrayals = betray[i];
      events_.push_back(ev);
      ++truth_.games_per_agent[placements[i].agent];
      ++truth_.emitted_events;
    }
    ++truth_.emitted_games;

    for (std::size_t i = 0; i < placements.size(); ++i) {
      for (std::size_t j = i + 1; j < placements.size(); ++j) {
        update_ledger(placements[i], placements[j], assists[i], indirect[i], betray[i],
                      assists[j], indirect[j], betray[j]);
      }
    }
  }

  void update_ledger(const Placement& a, const Placement& b, std::uint32_t a_assist,
                     std::uint32_t a_indirect, std::uint32_t a_betray, std::uint32_t b_assist,
                     std::uint32_t b_indirect, std::uint32_t b_betray) {
    const Placement& lo = a.agent < b.agent ? a : b;
    const Placement& hi = a.agent < b.agent ? b : a;
    const std::uint32_t lo_assist = a.agent < b.agent ? a_assist : b_assist;
    const std::uint32_t hi_assist = a.agent < b.agent ? b_assist : a_assist;
    const std::uint32_t lo_indirect = a.agent < b.agent ? a_indirect : b_indirect;
    const std::uint32_t hi_indirect = a.agent < b.agent ? b_indirect : a_indirect;
    const std::uint32_t lo_betray = a.agent < b.agent ? a_betray : b_betray;
    const std::uint32_t hi_betray = a.agent < b.agent ? b_betray : a_betray;

    PairLedger& ledger = truth_.pairs[pair_key(lo.agent, hi.agent)];
    ++ledger.shared_games;
    const std::uint64_t session_key =
        (static_cast<std::uint64_t>(lo.session) << 32) | hi.session;
    if (ledger.last_session_key != session_key) {
      ledger.last_session_key = session_key;
      ++ledger.shared_sessions;
    }
    if (lo.team == hi.team) {
      ledger.assists_lo_hi += lo_assist;
      ledger.assists_hi_lo += hi_assist;
      ledger.indirect_lo_hi += lo_indirect;
      ledger.indirect_hi_lo += hi_indirect;
    } else {
      ledger.betrayals_lo_hi += lo_betray;
      ledger.betrayals_hi_lo += hi_betray;
    }
  }

  void finish() {
    std::sort(events_.begin(), events_.end(),
              [](const InteractionEvent& a, const InteractionEvent& b) {
                if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
                if (a.game_id != b.game_id) return a.game_id < b.game_id;
                return a.player < b.player;
              });
  }

  static std::vector<std::pair<PlayerId, PlayerId>> make_labels(const GroundTruth& truth) {
    std::vector<std::pair<PlayerId, PlayerId>> labels;
    for (const auto& [lo, hi] : truth.friendships) {
      auto it = truth.pairs.find(pair_key(lo, hi));
      if (it == truth.pairs.end() || it->second.shared_games == 0) continue;
      labels.emplace_back(lo, hi);
      labels.emplace_back(hi, lo);
    }
    std::sort(labels.begin(), labels.end());
    return labels;
  }

  WorldConfig cfg_;
  Rng rng_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<double> rates_;
  std::vector<std::uint16_t> favorite_;
  std::vector<std::pair<BinIndex, std::uint32_t>> starts_;
  std::vector<BinIndex> busy_until_;
  std::vector<Session> active_;
  std::vector<InteractionEvent> events_;
  GroundTruth truth_;
  BinIndex total_bins_ = 0;
  std::uint32_t next_session_id_ = 0;
  GameId next_game_id_ = 0;
};

}  // namespace

void WorldConfig::validate() const {
  if (agents == 0) throw InputError("agents must be positive");
  if (days == 0) throw InputError("days must be positive");
  if (team_size == 0) throw InputError("team_size must be positive");
  if (playlist_count == 0) throw InputError("playlist_count must be positive");
  if (vehicle_playlists > playlist_count) {
    throw InputError("vehicle_playlists exceeds playlist_count");
  }
  if (friend_degree % 2 != 0) throw InputError("friend_degree must be even");
  if (kSecondsPerDay % bin_seconds != 0) throw InputError("bin_seconds must divide a day");
  for (double p : {friend_rewire, party_probability, friend_join_probability,
                   favorite_playlist_probability, friend_split_probability}) {
    if (p < 0 || p > 1) throw InputError("probabilities must lie in [0,1]");
  }
  for (double r : {activity_median, activity_sigma, assist_base, assist_friend_bonus,
                   indirect_base, indirect_friend_bonus, betrayal_base,
                   betrayal_friend_bonus, weekend_multiplier}) {
    if (r < 0) throw InputError("rates must be non-negative");
  }
  if (diurnal_amplitude < 0 || diurnal_amplitude >= 1) {
    throw InputError("diurnal_amplitude must lie in [0,1)");
  }
  if (solo_session_mean < 1.0) throw InputError("solo_session_mean must be >= 1");
  if (friend_session_mean <= solo_session_mean) {
    throw InputError("friend_session_mean must exceed solo_session_mean");
  }
}

bool GroundTruth::are_friends(std::uint32_t a, std::uint32_t b) const {
  if (a == b) return false;
  const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  return std::binary_search(friendships.begin(), friendships.end(), key);
}

double profile_intensity(const WorldConfig& config, BinIndex bin) {
  const std::int64_t ts =
      config.window_start() + static_cast<std::int64_t>(bin) * config.bin_seconds;
  const double hour = static_cast<double>(ts % kSecondsPerDay) / 3600.0;
  const double phase = 2.0 * M_PI * (hour - config.peak_hour) / 24.0;
  double rate = 1.0 + config.diurnal_amplitude * std::cos(phase);
  const int day = weekday_utc(ts);
  if (day >= 5) rate *= config.weekend_multiplier;
  return rate;
}

World generate(const WorldConfig& config) {
  Generator generator(config);
  return generator.run();
}

namespace {

struct ConfigField {
  const char* key;
  std::function<void(WorldConfig&, const std::string&)> set;
  std::function<std::string(const WorldConfig&)> get;
};

template <typename T>
T parse_number(const std::string& value) {
  std::size_t pos = 0;
  T out;
  if constexpr (std::is_floating_point_v<T>) {
    out = static_cast<T>(std::stod(value, &pos));
  } else {
    out = static_cast<T>(std::stoull(value, &pos));
  }
  if (pos != value.size()) throw std::invalid_argument("trailing characters");
  return out;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const std::vector<ConfigField>& config_fields() {
  static const std::vector<ConfigField> fields = [] {
    std::vector<ConfigField> f;
    auto add_u32 = [&f](const char* key, std::uint32_t WorldConfig::* member) {
      f.push_back({key,
                   [member](WorldConfig& c, const std::string& v) {
                     c.*member = parse_number<std::uint32_t>(v);
                   },
                   [member](const WorldConfig& c) { return std::to_string(c.*member); }});
    };
    auto add_u16 = [&f](const char* key, std::uint16_t WorldConfig::* member) {
      f.push_back({key,
                   [member](WorldConfig& c, const std::string& v) {
                     c.*member = parse_number<std::uint16_t>(v);
                   },
                   [member](const WorldConfig& c) { return std::to_string(c.*member); }});
    };
    auto add_u64 = [&f](const char* key, std::uint64_t WorldConfig::* member) {
      f.push_back({key,
                   [member](WorldConfig& c, const std::string& v) {
                     c.*member = parse_number<std::uint64_t>(v);
                   },
                   [member](const WorldConfig& c) { return std::to_string(c.*member); }});
    };
    auto add_i64 = [&f](const char* key, std::int64_t WorldConfig::* member) {
      f.push_back({key,
                   [member](WorldConfig& c, const std::string& v) {
                     c.*member = static_cast<std::int64_t>(parse_number<std::uint64_t>(v));
                   },
                   [member](const WorldConfig& c) { return std::to_string(c.*member); }});
    };
    auto add_f = [&f](const char* key, double WorldConfig::* member) {
      f.push_back({key,
                   [member](WorldConfig& c, const std::string& v) {
                     c.*member = parse_number<double>(v);
                   },
                   [member](const WorldConfig& c) { return format_number(c.*member); }});
    };
    add_u32("agents", &WorldConfig::agents);
    add_u32("days", &WorldConfig::days);
    add_u64("seed", &WorldConfig::seed);
    add_i64("start_day", &WorldConfig::start_day);
    add_i64("bin_seconds", &WorldConfig::bin_seconds);
    add_u32("friend_degree", &WorldConfig::friend_degree);
    add_f("friend_rewire", &WorldConfig::friend_rewire);
    add_f("activity_median", &WorldConfig::activity_median);
    add_f("activity_sigma", &WorldConfig::activity_sigma);
    add_f("diurnal_amplitude", &WorldConfig::diurnal_amplitude);
    add_f("peak_hour", &WorldConfig::peak_hour);
    add_f("weekend_multiplier", &WorldConfig::weekend_multiplier);
    add_f("friend_session_mean", &WorldConfig::friend_session_mean);
    add_f("solo_session_mean", &WorldConfig::solo_session_mean);
    add_f("party_probability", &WorldConfig::party_probability);
    add_f("friend_join_probability", &WorldConfig::friend_join_probability);
    add_u16("playlist_count", &WorldConfig::playlist_count);
    add_u16("vehicle_playlists", &WorldConfig::vehicle_playlists);
    add_f("favorite_playlist_probability", &WorldConfig::favorite_playlist_probability);
    add_u32("team_size", &WorldConfig::team_size);
    add_f("friend_split_probability", &WorldConfig::friend_split_probability);
    add_f("assist_base", &WorldConfig::assist_base);
    add_f("assist_friend_bonus", &WorldConfig::assist_friend_bonus);
    add_f("indirect_base", &WorldConfig::indirect_base);
    add_f("indirect_friend_bonus", &WorldConfig::indirect_friend_bonus);
    add_f("betrayal_base", &WorldConfig::betrayal_base);
    add_f("betrayal_friend_bonus", &WorldConfig::betrayal_friend_bonus);
    return f;
  }();
  return fields;
}

}  // namespace

WorldConfig parse_world_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config: " + path);
  WorldConfig config;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw FormatError(path, line_no, "expected key=value");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    bool found = false;
    for (const auto& field : config_fields()) {
      if (key == field.key) {
        try {
          field.set(config, value);
        } catch (const std::exception&) {
          throw FormatError(path, line_no, "bad value for " + key);
        }
        found = true;
        break;
      }
    }
    if (!found) throw FormatError(path, line_no, "unknown config key: " + key);
  }
  return config;
}

void write_world_config(const WorldConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  for (const auto& field : config_fields()) {
    out << field.key << "=" << field.get(config) << "\n";
  }
}

void write_world(const World& world, const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(directory) / "truth");
  const fs::path dir(directory);

  world.to_store().dump((dir / "events.tsv").string());

  {
    std::ofstream out(dir / "labels.tsv");
    for (const auto& [rater, target] : world.labels) {
      out << rater << "\t" << target << "\t1\n";
    }
  }
  {
    std::ofstream out(dir / "names.tsv");
    for (std::uint32_t i = 0; i < world.config.agents; ++i) {
      out << i << "\tagent" << i << "\n";
    }
  }
  write_world_config(world.config, (dir / "config.cfg").string());

  const GroundTruth& truth = world.truth;
  {
    std::ofstream out(dir / "truth" / "friendships.tsv");
    out << "# lo\thi\tshared_sessions\tshared_games\n";
    for (const auto& [lo, hi] : truth.friendships) {
      auto it = truth.pairs.find(pair_key(lo, hi));
      const std::uint64_t sessions = it == truth.pairs.end() ? 0 : it->second.shared_sessions;
      const std::uint64_t games = it == truth.pairs.end() ? 0 : it->second.shared_games;
      out << lo << "\t" << hi << "\t" << sessions << "\t" << games << "\n";
    }
  }
  {
    std::vector<std::uint64_t> keys;
    keys.reserve(truth.pairs.size());
    for (const auto& [key, ledger] : truth.pairs) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    std::ofstream out(dir / "truth" / "ledger.tsv");
    out << "# lo\thi\tn_games\tn_sessions\ta_lo_hi\ta_hi_lo\tv_lo_hi\tv_hi_lo\tb_lo_hi\tb_hi_lo\n";
    for (std::uint64_t key : keys) {
      const PairLedger& l = truth.pairs.at(key);
      out << (key >> 32) << "\t" << (key & 0xffffffffu) << "\t" << l.shared_games << "\t"
          << l.shared_sessions << "\t" << l.assists_lo_hi << "\t" << l.assists_hi_lo << "\t"
          << l.indirect_lo_hi << "\t" << l.indirect_hi_lo << "\t" << l.betrayals_lo_hi << "\t"
          << l.betrayals_hi_lo << "\n";
    }
  }
  {
    std::ofstream out(dir / "truth" / "agents.tsv");
    out << "# agent\tn_games\n";
    for (std::uint32_t i = 0; i < world.config.agents; ++i) {
      out << i << "\t" << truth.games_per_agent[i] << "\n";
    }
  }
  {
    std::ofstream out(dir / "truth" / "stats.tsv");
    out << "emitted_games\t" << truth.emitted_games << "\n";
    out << "emitted_events\t" << truth.emitted_events << "\n";
    out << "dropped_games\t" << truth.dropped_games << "\n";
    out << "undersized_games\t" << truth.undersized_games << "\n";
    out << "skipped_sessions\t" << truth.skipped_sessions << "\n";
    out << "friendships\t" << truth.friendships.size() << "\n";
    out << "labeled_pairs\t" << world.labels.size() << "\n";
  }
}

}  // namespace ties
