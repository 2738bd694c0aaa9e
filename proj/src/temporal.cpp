#include "ties/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <unordered_map>

#include "ties/fft.hpp"

namespace ties {

namespace {

std::uint64_t ac_sparse(std::span<const BinIndex> bins, std::uint32_t tau_max) {
  // Two-pointer count of pairs with gap in [1, tau_max]; bins are strictly
  // increasing so every earlier bin inside the window contributes one pair.
  std::uint64_t total = 0;
  std::size_t lo = 0;
  for (std::size_t j = 1; j < bins.size(); ++j) {
    while (bins[j] - bins[lo] > tau_max) ++lo;
    total += j - lo;
  }
  return total;
}

std::uint64_t ac_fft(std::span<const BinIndex> bins, std::uint32_t tau_max) {
  const std::size_t k = bins.size();
  if (k < 2) return 0;
  const BinIndex first = bins.front();
  const std::size_t span = bins.back() - first + 1;
  const std::size_t m = next_pow2(2 * span);
  std::vector<std::complex<double>> a(m, 0.0);
  for (BinIndex b : bins) a[b - first] = 1.0;
  fft_radix2(a, false);
  for (auto& v : a) v *= std::conj(v);
  fft_radix2(a, true);
  // a[tau] now holds the linear autocorrelation at lag tau (zero padding to
  // at least twice the span prevents circular wraparound).
  const std::size_t max_lag = std::min<std::size_t>(tau_max, span - 1);
  std::uint64_t total = 0;
  for (std::size_t tau = 1; tau <= max_lag; ++tau) {
    const double v = a[tau].real();
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-6) {
      throw NumericError("fft autocorrelation failed integrality check at lag " +
                         std::to_string(tau));
    }
    total += static_cast<std::uint64_t>(r);
  }
  return total;
}

void location_histogram(const EventStore& store, PlayerId x, LocationKind kind,
                        std::unordered_map<std::uint32_t, std::uint64_t>& counts,
                        std::uint64_t& total) {
  for (std::uint32_t offset : store.player_events(store.player_index(x))) {
    const InteractionEvent& ev = store.events()[offset];
    std::uint32_t key = 0;
    switch (kind) {
      case LocationKind::kSchedule:
        key = static_cast<std::uint32_t>(weekday_utc(ev.timestamp));
        break;
      case LocationKind::kSpatial:
        key = ev.playlist;
        break;
      case LocationKind::kJoint:
        key = static_cast<std::uint32_t>(weekday_utc(ev.timestamp)) * 65536u + ev.playlist;
        break;
    }
    ++counts[key];
    ++total;
  }
}

}  // namespace

std::uint64_t autocorrelation(const PairSeries& series, const AcOptions& options) {
  if (options.tau_max < 1) throw std::invalid_argument("tau_max must be >= 1");
  if (series.bins.size() < 2) return 0;
  switch (options.mode) {
    case AcMode::kSparse:
      return ac_sparse(series.bins, options.tau_max);
    case AcMode::kFft:
      return ac_fft(series.bins, options.tau_max);
    case AcMode::kAuto:
      break;
  }
  return series.bins.size() <= options.fft_crossover ? ac_sparse(series.bins, options.tau_max)
                                                     : ac_fft(series.bins, options.tau_max);
}

PairFrequency pair_frequency(const EventStore& store, PlayerId x, PlayerId y) {
  const std::uint64_t n_x = store.games_played(x);
  if (n_x == 0) throw InputError("player has no games");
  PairFrequency f;
  f.shared_games = store.copresence(x, y).size();
  f.normalized = static_cast<double>(f.shared_games) / static_cast<double>(n_x);
  return f;
}

double entropy(const EventStore& store, PlayerId x, LocationKind kind) {
  std::unordered_map<std::uint32_t, std::uint64_t> counts;
  std::uint64_t total = 0;
  location_histogram(store, x, kind, counts, total);
  if (total == 0) throw InputError("player has no games");
  double h = 0.0;
  for (const auto& [key, count] : counts) {
    const double p = static_cast<double>(count) / static_cast<double>(total);
    h -= p * std::log(p);
  }
  return h < 0 ? 0.0 : h;
}

double pair_entropy(const EventStore& store, PlayerId x, PlayerId y, LocationKind kind) {
  return entropy(store, x, kind) + entropy(store, y, kind);
}

}  // namespace ties
